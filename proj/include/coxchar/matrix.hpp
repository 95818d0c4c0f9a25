#pragma once

#include <vector>

#include "coxchar/cyclotomic.hpp"

namespace coxchar {

// Dense matrix over Q(zeta_L) with one shared conductor for all entries.
class CycloMatrix {
 public:
  CycloMatrix(long rows, long cols, long conductor);
  static CycloMatrix identity(long n, long conductor);
  static CycloMatrix diagonal(const std::vector<CycloNumber>& entries);
  static CycloMatrix from_rational_rows(const std::vector<std::vector<Rational>>& rows);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long conductor() const { return conductor_; }

  const CycloNumber& at(long r, long c) const;
  void set(long r, long c, const CycloNumber& value);  // enforces the shared conductor

  CycloMatrix lifted(long target) const;
  std::vector<CycloNumber> diagonal_entries() const;

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

 private:
  long rows_;
  long cols_;
  long conductor_;
  std::vector<CycloNumber> entries_;  // row-major
};

// Exact determinant by Gaussian elimination over the field (entries are
// exact, so pivoting only needs a nonzero entry). Rejects non-square input.
CycloNumber det_exact(const CycloMatrix& m);

// Exact inverse via Gauss-Jordan; throws std::domain_error when singular.
CycloMatrix inverse(const CycloMatrix& m);

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence;
// coefficients constant term first, monic, length n+1.
std::vector<CycloNumber> char_poly(const CycloMatrix& m);

}  // namespace coxchar
