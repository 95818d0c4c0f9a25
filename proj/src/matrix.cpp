#include "coxchar/matrix.hpp"

#include <stdexcept>

namespace coxchar {

CycloMatrix::CycloMatrix(long rows, long cols, long conductor)
    : rows_(rows), cols_(cols), conductor_(conductor) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  CycloNumber::zero(conductor));
}

CycloMatrix CycloMatrix::identity(long n, long conductor) {
  CycloMatrix m(n, n, conductor);
  for (long i = 0; i < n; ++i) m.set(i, i, CycloNumber::one(conductor));
  return m;
}

CycloMatrix CycloMatrix::diagonal(const std::vector<CycloNumber>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty diagonal");
  CycloMatrix m(static_cast<long>(entries.size()), static_cast<long>(entries.size()),
                entries.front().conductor());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m.set(static_cast<long>(i), static_cast<long>(i), entries[i]);
  }
  return m;
}

CycloMatrix CycloMatrix::from_rational_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  const long r = static_cast<long>(rows.size());
  const long c = static_cast<long>(rows.front().size());
  CycloMatrix m(r, c, 1);
  for (long i = 0; i < r; ++i) {
    if (static_cast<long>(rows[static_cast<std::size_t>(i)].size()) != c) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (long j = 0; j < c; ++j) {
      m.set(i, j, CycloNumber(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1));
    }
  }
  return m;
}

const CycloNumber& CycloMatrix::at(long r, long c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
}

void CycloMatrix::set(long r, long c, const CycloNumber& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  if (value.conductor() != conductor_) {
    throw std::invalid_argument("matrix entry conductor mismatch; lift first");
  }
  entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c)] = value;
}

CycloMatrix CycloMatrix::lifted(long target) const {
  CycloMatrix out(rows_, cols_, target);
  for (long r = 0; r < rows_; ++r) {
    for (long c = 0; c < cols_; ++c) out.set(r, c, at(r, c).lifted(target));
  }
  return out;
}

std::vector<CycloNumber> CycloMatrix::diagonal_entries() const {
  if (rows_ != cols_) throw std::invalid_argument("diagonal of non-square matrix");
  std::vector<CycloNumber> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (long i = 0; i < rows_; ++i) out.push_back(at(i, i));
  return out;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  if (a.conductor_ != b.conductor_) throw std::invalid_argument("matrix product conductor mismatch");
  CycloMatrix out(a.rows_, b.cols_, a.conductor_);
  for (long i = 0; i < a.rows_; ++i) {
    for (long j = 0; j < b.cols_; ++j) {
      CycloNumber acc = CycloNumber::zero(a.conductor_);
      for (long k = 0; k < a.cols_; ++k) acc += a.at(i, k) * b.at(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.conductor_ != b.conductor_) return false;
  return a.entries_ == b.entries_;
}

CycloNumber det_exact(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const long n = m.rows();
  const long L = m.conductor();
  if (n == 0) return CycloNumber::one(L);

  std::vector<std::vector<CycloNumber>> a(static_cast<std::size_t>(n));
  for (long r = 0; r < n; ++r) {
    auto& row = a[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(n));
    for (long c = 0; c < n; ++c) row.push_back(m.at(r, c));
  }

  CycloNumber det = CycloNumber::one(L);
  for (long k = 0; k < n; ++k) {
    long pivot = -1;
    for (long r = k; r < n; ++r) {
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return CycloNumber::zero(L);
    if (pivot != k) {
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(k)]);
      det = -det;
    }
    const CycloNumber& p = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    det *= p;
    const CycloNumber pinv = p.inverse();
    for (long r = k + 1; r < n; ++r) {
      CycloNumber f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] * pinv;
      if (f.is_zero()) continue;
      for (long c = k; c < n; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      }
    }
  }
  return det;
}

CycloMatrix inverse(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const long n = m.rows();
  const long L = m.conductor();

  std::vector<std::vector<CycloNumber>> a(static_cast<std::size_t>(n));
  for (long r = 0; r < n; ++r) {
    auto& row = a[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(2 * n));
    for (long c = 0; c < n; ++c) row.push_back(m.at(r, c));
    for (long c = 0; c < n; ++c) {
      row.push_back(c == r ? CycloNumber::one(L) : CycloNumber::zero(L));
    }
  }

  for (long k = 0; k < n; ++k) {
    long pivot = -1;
    for (long r = k; r < n; ++r) {
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("singular matrix");
    if (pivot != k) std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(k)]);
    const CycloNumber pinv = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].inverse();
    for (long c = 0; c < 2 * n; ++c) {
      a[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] *= pinv;
    }
    for (long r = 0; r < n; ++r) {
      if (r == k) continue;
      CycloNumber f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
      if (f.is_zero()) continue;
      for (long c = 0; c < 2 * n; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      }
    }
  }

  CycloMatrix out(n, n, L);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      out.set(r, c, a[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + c)]);
    }
  }
  return out;
}

std::vector<CycloNumber> char_poly(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  const long n = m.rows();
  const long L = m.conductor();

  // Faddeev-LeVerrier: M_1 = A, a_{n-k} = -tr(M_k)/k, M_{k+1} = A(M_k + a_{n-k} I).
  std::vector<CycloNumber> coeffs(static_cast<std::size_t>(n) + 1, CycloNumber::zero(L));
  coeffs[static_cast<std::size_t>(n)] = CycloNumber::one(L);

  CycloMatrix mk = m;
  for (long k = 1; k <= n; ++k) {
    CycloNumber tr = CycloNumber::zero(L);
    for (long i = 0; i < n; ++i) tr += mk.at(i, i);
    CycloNumber a = -(tr * Rational(1, k));
    coeffs[static_cast<std::size_t>(n - k)] = a;
    if (k == n) break;
    CycloMatrix shifted = mk;
    for (long i = 0; i < n; ++i) shifted.set(i, i, shifted.at(i, i) + a);
    mk = m * shifted;
  }
  return coeffs;
}

}  // namespace coxchar
