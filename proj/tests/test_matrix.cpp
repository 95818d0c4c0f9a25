#include <doctest.h>

#include "coxchar/matrix.hpp"
#include "coxchar/verify.hpp"

using namespace coxchar;

namespace {

CycloMatrix random_rational_matrix(long n, long height, SeedStream& stream) {
  CycloMatrix m(n, n, 1);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) m.set(r, c, CycloNumber(random_rational(height, stream, false), 1));
  }
  return m;
}

// Independent determinant oracle: cofactor expansion along the first row.
CycloNumber det_cofactor(const CycloMatrix& m) {
  const long n = m.rows();
  if (n == 1) return m.at(0, 0);
  CycloNumber acc = CycloNumber::zero(m.conductor());
  for (long c = 0; c < n; ++c) {
    CycloMatrix minor(n - 1, n - 1, m.conductor());
    for (long r = 1; r < n; ++r) {
      long cc = 0;
      for (long k = 0; k < n; ++k) {
        if (k == c) continue;
        minor.set(r - 1, cc++, m.at(r, k));
      }
    }
    CycloNumber term = m.at(0, c) * det_cofactor(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("determinant on pinned cases") {
  CHECK(det_exact(CycloMatrix::identity(3, 1)) == Rational(1));

  const auto m2 = CycloMatrix::from_rational_rows({{Rational(1), Rational(2)},
                                                   {Rational(3), Rational(4)}});
  CHECK(det_exact(m2) == Rational(-2));

  SUBCASE("4x4 Vandermonde rows x_j^{3-i} at nodes 1,2,3,4") {
    const std::vector<Rational> nodes{Rational(1), Rational(2), Rational(3), Rational(4)};
    CycloMatrix v(4, 4, 1);
    for (long r = 0; r < 4; ++r) {
      for (long c = 0; c < 4; ++c) {
        v.set(r, c, CycloNumber(rational_pow(nodes[static_cast<std::size_t>(c)], 3 - r), 1));
      }
    }
    // oracle: prod_{i<j} (x_i - x_j)
    Rational expected(1);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) expected *= nodes[i] - nodes[j];
    }
    CHECK(expected == 12);
    CHECK(det_exact(v) == expected);
  }

  CHECK_THROWS_AS(det_exact(CycloMatrix(2, 3, 1)), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  SeedStream stream(31337);
  for (int rep = 0; rep < 20; ++rep) {
    const CycloMatrix m = random_rational_matrix(3, 5, stream);
    CHECK(det_exact(m) == det_cofactor(m));
  }
  SUBCASE("also over a nontrivial conductor") {
    SeedStream s2(99);
    for (int rep = 0; rep < 5; ++rep) {
      CycloMatrix m(3, 3, 5);
      for (long r = 0; r < 3; ++r) {
        for (long c = 0; c < 3; ++c) {
          m.set(r, c, root_of_unity(5, s2.uniform_int(0, 4)) * random_rational(4, s2, false));
        }
      }
      CHECK(det_exact(m) == det_cofactor(m));
    }
  }
}

TEST_CASE("inverse and multiplication") {
  SeedStream stream(4242);
  for (int rep = 0; rep < 10; ++rep) {
    const CycloMatrix m = random_rational_matrix(3, 5, stream);
    if (det_exact(m).is_zero()) continue;
    CHECK(m * inverse(m) == CycloMatrix::identity(3, 1));
    CHECK(inverse(m) * m == CycloMatrix::identity(3, 1));
  }
  CycloMatrix singular(2, 2, 1);
  singular.set(0, 0, CycloNumber::one(1));
  singular.set(1, 0, CycloNumber::one(1));
  CHECK_THROWS_AS(inverse(singular), std::domain_error);
}

TEST_CASE("characteristic polynomial") {
  const auto m = CycloMatrix::from_rational_rows({{Rational(1), Rational(2)},
                                                  {Rational(3), Rational(4)}});
  const auto p = char_poly(m);  // x^2 - 5x - 2
  REQUIRE(p.size() == 3);
  CHECK(p[2] == Rational(1));
  CHECK(p[1] == Rational(-5));
  CHECK(p[0] == Rational(-2));

  SUBCASE("constant coefficient is (-1)^n det") {
    SeedStream stream(5150);
    for (int rep = 0; rep < 8; ++rep) {
      const CycloMatrix a = random_rational_matrix(3, 4, stream);
      const auto cp = char_poly(a);
      CHECK(cp[0] == -det_exact(a));
    }
  }
}
