#include "coxchar/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coxchar {

namespace {

std::uint64_t splitmix_step(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SeedStream::next_u64() { return splitmix_step(state_); }

long long SeedStream::uniform_int(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int with empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1ull;
  if (range == 0) return static_cast<long long>(next_u64());  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t draw;
  do {
    draw = next_u64();
  } while (draw >= limit);
  return lo + static_cast<long long>(draw % range);
}

SeedStream SeedStream::fork(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
  // Each absorbed word passes through the full avalanche step.
  std::uint64_t s = state_;
  std::uint64_t h = splitmix_step(s);
  s = h ^ a;
  h = splitmix_step(s);
  s = h ^ b;
  h = splitmix_step(s);
  s = h ^ c;
  h = splitmix_step(s);
  return SeedStream(h);
}

Weight random_weight(long N, long long lo, long long hi, SeedStream& stream) {
  if (N < 1) throw std::invalid_argument("random_weight needs N >= 1");
  if (lo > hi) throw std::invalid_argument("random_weight needs lo <= hi");
  // Multisets of size N from a range of R values correspond to N-subsets of
  // {0..R+N-2}; a uniform subset gives a uniform weakly decreasing tuple.
  const long long R = hi - lo + 1;
  std::set<long long> chosen;
  while (static_cast<long>(chosen.size()) < N) {
    chosen.insert(stream.uniform_int(0, R + N - 2));
  }
  std::vector<long long> entries;
  entries.reserve(static_cast<std::size_t>(N));
  long long k = 0;
  for (long long y : chosen) entries.push_back(lo + (y - k++));
  std::reverse(entries.begin(), entries.end());
  return Weight(std::move(entries));
}

Rational random_rational(long height, SeedStream& stream, bool nonzero) {
  if (height < 1) throw std::invalid_argument("height bound must be positive");
  long long num;
  do {
    num = stream.uniform_int(-height, height);
  } while (nonzero && num == 0);
  long long den = stream.uniform_int(1, height);
  return make_rational(static_cast<long>(num), static_cast<long>(den));
}

std::vector<Rational> random_regular_tuple(long m, long n, long height, SeedStream& stream) {
  while (true) {
    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) t.push_back(random_rational(height, stream));
    std::vector<Rational> powers;
    powers.reserve(t.size());
    for (const auto& ti : t) powers.push_back(rational_pow(ti, n));
    bool distinct = true;
    for (std::size_t i = 0; i < powers.size() && distinct; ++i) {
      for (std::size_t j = i + 1; j < powers.size(); ++j) {
        if (powers[i] == powers[j]) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) return t;
  }
}

CycloNumber oracle_elementary(long k, const std::vector<CycloNumber>& xs) {
  if (k < 0) throw std::invalid_argument("oracle_elementary needs k >= 0");
  const long L = xs.empty() ? 1 : xs.front().conductor();
  // Coefficients of prod (1 + x_i u), truncated at degree k.
  std::vector<CycloNumber> e(static_cast<std::size_t>(k) + 1, CycloNumber::zero(L));
  e[0] = CycloNumber::one(L);
  for (const auto& x : xs) {
    for (long j = k; j >= 1; --j) {
      e[static_cast<std::size_t>(j)] += x * e[static_cast<std::size_t>(j - 1)];
    }
  }
  return e[static_cast<std::size_t>(k)];
}

CycloNumber oracle_homogeneous(long k, const std::vector<CycloNumber>& xs) {
  if (k < 0) throw std::invalid_argument("oracle_homogeneous needs k >= 0");
  const long L = xs.empty() ? 1 : xs.front().conductor();
  // Coefficients of prod 1/(1 - x_i u), truncated at degree k.
  std::vector<CycloNumber> h(static_cast<std::size_t>(k) + 1, CycloNumber::zero(L));
  h[0] = CycloNumber::one(L);
  for (const auto& x : xs) {
    for (long j = 1; j <= k; ++j) {
      h[static_cast<std::size_t>(j)] += x * h[static_cast<std::size_t>(j - 1)];
    }
  }
  return h[static_cast<std::size_t>(k)];
}

namespace {

void enumerate_tableaux(const std::vector<long long>& shape, const std::vector<CycloNumber>& xs,
                        std::vector<std::vector<int>>& tableau, std::size_t row, std::size_t col,
                        const CycloNumber& monomial, CycloNumber& total) {
  if (row == shape.size()) {
    total += monomial;
    return;
  }
  std::size_t next_row = row;
  std::size_t next_col = col + 1;
  if (next_col >= static_cast<std::size_t>(shape[row])) {
    next_row = row + 1;
    next_col = 0;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, tableau[row][col - 1]);            // rows weakly increase
  if (row > 0) lo = std::max(lo, tableau[row - 1][col] + 1);        // columns strictly increase
  for (int v = lo; v <= static_cast<int>(xs.size()); ++v) {
    tableau[row][col] = v;
    enumerate_tableaux(shape, xs, tableau, next_row, next_col,
                       monomial * xs[static_cast<std::size_t>(v - 1)], total);
  }
}

}  // namespace

CycloNumber oracle_tableaux(const Weight& lambda, const std::vector<CycloNumber>& xs) {
  if (xs.empty() || xs.size() > 3) throw std::invalid_argument("oracle_tableaux needs 1..3 variables");
  long long boxes = 0;
  std::vector<long long> shape;
  for (long long part : lambda.entries()) {
    if (part < 0) throw std::invalid_argument("oracle_tableaux needs non-negative weights");
    if (part > 0) shape.push_back(part);
    boxes += part;
  }
  if (boxes > 8) throw std::invalid_argument("oracle_tableaux enumeration bound exceeded");
  if (lambda.size() > xs.size()) {
    // More rows than letters: no tableau unless the extra rows are empty.
    for (std::size_t i = xs.size(); i < lambda.size(); ++i) {
      if (lambda[i] != 0) return CycloNumber::zero(xs.front().conductor());
    }
  }
  const long L = xs.front().conductor();
  if (shape.empty()) return CycloNumber::one(L);
  if (shape.size() > xs.size()) return CycloNumber::zero(L);

  std::vector<std::vector<int>> tableau;
  for (long long len : shape) tableau.emplace_back(static_cast<std::size_t>(len), 0);
  CycloNumber total = CycloNumber::zero(L);
  enumerate_tableaux(shape, xs, tableau, 0, 0, CycloNumber::one(L), total);
  return total;
}

}  // namespace coxchar
