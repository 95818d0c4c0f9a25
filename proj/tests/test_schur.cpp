#include <doctest.h>

#include "coxchar/schur.hpp"
#include "coxchar/verify.hpp"
#include "coxchar/weights.hpp"

using namespace coxchar;

namespace {

std::vector<CycloNumber> rationals(std::initializer_list<long> values) {
  std::vector<CycloNumber> out;
  for (long v : values) out.emplace_back(Rational(v), 1);
  return out;
}

std::vector<CycloNumber> distinct_nonzero_tuple(long count, long height, SeedStream& stream) {
  std::vector<Rational> xs;
  while (static_cast<long>(xs.size()) < count) {
    Rational r = random_rational(height, stream);
    bool fresh = true;
    for (const auto& x : xs) {
      if (x == r) fresh = false;
    }
    if (fresh) xs.push_back(r);
  }
  return to_cyclo(xs);
}

// Weyl dimension cross-check: product of hooks-and-contents for the diagram
// of a non-negative weight, dim = prod_cells (N + c(cell)) / hook(cell).
Rational hook_content_dimension(const Weight& lambda, long N) {
  std::vector<long long> shape(lambda.entries());
  std::vector<long long> conj(static_cast<std::size_t>(shape.empty() ? 0 : shape[0]), 0);
  for (long long part : shape) {
    for (long long c = 0; c < part; ++c) ++conj[static_cast<std::size_t>(c)];
  }
  Rational dim(1);
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (long long c = 0; c < shape[r]; ++c) {
      const long hook = static_cast<long>((shape[r] - c) +
                                          (conj[static_cast<std::size_t>(c)] - static_cast<long long>(r)) - 1);
      const long content = static_cast<long>(c - static_cast<long long>(r));
      dim *= Rational(N + content);
      dim /= Rational(hook);
    }
  }
  return dim;
}

}  // namespace

TEST_CASE("weyl numerator") {
  const auto xy = rationals({5, 3});
  CHECK(weyl_numerator(Weight({0, 0}), xy) == Rational(2));  // x - y

  SUBCASE("repeated column gives zero") {
    CHECK(weyl_numerator(Weight({2, 1, 0}), rationals({4, 4, 1})).is_zero());
  }

  SUBCASE("(1,1,0,0) numerator at (1,2,-1,-2) against a cofactor-free identity") {
    // numerator / denominator must be e_2 = -5; checked both directly and
    // via the full determinant.
    const auto xs = rationals({1, 2, -1, -2});
    const CycloNumber num = weyl_numerator(Weight({1, 1, 0, 0}), xs);
    const CycloNumber den = weyl_denominator(xs);
    CHECK(num == den * oracle_elementary(2, xs));
  }

  CHECK_THROWS_AS(weyl_numerator(Weight({0, -1}), rationals({2, 3})), std::domain_error);
  CHECK_THROWS_AS(weyl_numerator(Weight({1, 0}), rationals({2})), std::invalid_argument);
}

TEST_CASE("weyl denominator") {
  CHECK(weyl_denominator(rationals({3, 1})) == Rational(2));
  CHECK(weyl_denominator(rationals({7, 7})).is_zero());

  SUBCASE("matches the zero-weight numerator") {
    SeedStream stream(1404);
    for (int rep = 0; rep < 10; ++rep) {
      const auto xs = distinct_nonzero_tuple(4, 5, stream);
      CHECK(weyl_denominator(xs) == weyl_numerator(Weight({0, 0, 0, 0}), xs));
    }
  }

  SUBCASE("closed form at the order-2 twisted tuple (t1,t2,-t1,-t2)") {
    // With rows following the decreasing staircase, the product at
    // (t1,t2,-t1,-t2) works out to -4*t1*t2*(t1^2-t2^2)^2; the grouped
    // ordering (t1,-t1,t2,-t2) flips the permutation parity and gives
    // +4*t1*t2*(t1^2-t2^2)^2.
    SeedStream stream(63);
    for (int rep = 0; rep < 10; ++rep) {
      const Rational t1 = random_rational(6, stream);
      const Rational t2 = random_rational(6, stream);
      const Rational closed =
          Rational(4) * t1 * t2 * rational_pow(t1 * t1 - t2 * t2, 2);
      CHECK(weyl_denominator(to_cyclo({t1, t2, -t1, -t2})) == -closed);
      CHECK(weyl_denominator(to_cyclo({t1, -t1, t2, -t2})) == closed);
    }
    CHECK(weyl_denominator(rationals({1, 2, -1, -2})) == Rational(-72));
    CHECK(weyl_denominator(rationals({1, -1, 2, -2})) == Rational(72));
  }
}

TEST_CASE("bialternant engine") {
  const auto xs = rationals({1, 2, -1, -2});
  CHECK(char_bialternant(Weight({0, 0, 0, 0}), xs) == Rational(1));
  CHECK(char_bialternant(Weight({1, 0, 0, 0}), xs) == Rational(0));  // sum of eigenvalues
  CHECK(char_bialternant(Weight({1, 0}), rationals({4, 9})) == Rational(13));
  CHECK(char_bialternant(Weight({1, 1, 0, 0}), xs) == oracle_elementary(2, xs));
  CHECK(char_bialternant(Weight({1, 1, 0, 0}), xs) == Rational(-5));

  CHECK_THROWS_AS(char_bialternant(Weight({1, 0}), rationals({3, 3})), std::domain_error);
  CHECK_THROWS_AS(char_bialternant(Weight({0, -1}), rationals({0, 3})), std::domain_error);

  SUBCASE("negative entries via the det-shift") {
    // lambda = (0,-1) is the dual of the standard rep: value = sum of inverses
    const auto ys = rationals({2, 4});
    const CycloNumber v = char_bialternant(Weight({0, -1}), ys);
    CHECK(v == parse_rational("3/4"));
  }
}

TEST_CASE("jacobi-trudi engine") {
  const auto xs = rationals({1, 2, -1, -2});
  CHECK(char_jacobi_trudi(Weight({2, 0, 0, 0}), xs) == oracle_homogeneous(2, xs));
  CHECK(char_jacobi_trudi(Weight({2, 0, 0, 0}), xs) == Rational(5));
  CHECK(char_jacobi_trudi(Weight({0, 0, 0}), rationals({9, 9, 9})) == Rational(1));

  SUBCASE("well-defined at irregular points") {
    const auto twice = rationals({6, 6});
    CHECK(char_jacobi_trudi(Weight({1, 1}), twice) == Rational(36));  // x^2 at x=6
    CHECK(char_jacobi_trudi(Weight({1, 0}), rationals({2, 2})) == Rational(4));
  }

  SUBCASE("agrees with the tableau oracle on its domain") {
    SeedStream stream(8128);
    for (int rep = 0; rep < 25; ++rep) {
      const long N = stream.uniform_int(1, 3);
      Weight lambda = random_weight(N, 0, 3, stream);
      const auto ys = distinct_nonzero_tuple(N, 4, stream);
      CHECK(char_jacobi_trudi(lambda, ys) == oracle_tableaux(lambda, ys));
    }
  }
}

TEST_CASE("engine agreement and dispatcher") {
  SeedStream stream(240901);
  for (int rep = 0; rep < 60; ++rep) {
    const long N = stream.uniform_int(1, 6);
    const Weight lambda = random_weight(N, -3, 5, stream);
    const auto xs = distinct_nonzero_tuple(N, 5, stream);
    const CycloNumber a = char_bialternant(lambda, xs);
    const CycloNumber b = char_jacobi_trudi(lambda, xs);
    CHECK(a == b);
    CHECK(character_at(lambda, xs) == a);
  }

  SUBCASE("dispatcher reaches irregular points") {
    CHECK(character_at(Weight({1, 0}), rationals({2, 2})) == Rational(4));
    CHECK(character_at(Weight({3, 1}), rationals({1, 2})) == oracle_tableaux(Weight({3, 1}), rationals({1, 2})));
    CHECK(character_at(Weight({3, 1}), rationals({1, 2})) == Rational(14));
  }
}

TEST_CASE("character symmetry and covariance") {
  SeedStream stream(424243);

  SUBCASE("invariant under permutations of the eigenvalues") {
    for (int rep = 0; rep < 15; ++rep) {
      const long N = stream.uniform_int(2, 5);
      const Weight lambda = random_weight(N, -2, 4, stream);
      auto xs = distinct_nonzero_tuple(N, 5, stream);
      const CycloNumber base = character_at(lambda, xs);
      for (int shuffle = 0; shuffle < 3; ++shuffle) {
        const std::size_t i = static_cast<std::size_t>(stream.uniform_int(0, N - 1));
        const std::size_t j = static_cast<std::size_t>(stream.uniform_int(0, N - 1));
        std::swap(xs[i], xs[j]);
      }
      CHECK(character_at(lambda, xs) == base);
    }
  }

  SUBCASE("det-twist covariance") {
    for (int rep = 0; rep < 15; ++rep) {
      const long N = stream.uniform_int(1, 4);
      const Weight lambda = random_weight(N, -2, 3, stream);
      const auto xs = distinct_nonzero_tuple(N, 5, stream);
      CycloNumber prod = CycloNumber::one(1);
      for (const auto& x : xs) prod *= x;
      for (long long c : {-2, -1, 1, 2}) {
        CHECK(character_at(lambda.shifted(c), xs) == character_at(lambda, xs) * prod.pow(c));
      }
    }
  }

  SUBCASE("values at rational twisted points are rational") {
    for (int rep = 0; rep < 12; ++rep) {
      const long m = stream.uniform_int(1, 2);
      const long n = stream.uniform_int(2, 4);
      const Weight lambda = random_weight(m * n, 0, 3, stream);
      SeedStream inner = stream.fork(static_cast<std::uint64_t>(rep));
      const auto t = random_regular_tuple(m, n, 5, inner);
      const CycloNumber v =
          character_at(lambda, eigenvalues_of_twisted_point(TwistedPoint::from_rationals(t, n)));
      CHECK(v.is_rational());
    }
  }
}

TEST_CASE("dimension positivity against the hook-content product") {
  SeedStream stream(1729);
  for (int rep = 0; rep < 20; ++rep) {
    const long N = stream.uniform_int(1, 4);
    const Weight lambda = random_weight(N, 0, 4, stream);
    const std::vector<CycloNumber> ones(static_cast<std::size_t>(N), CycloNumber::one(1));
    const CycloNumber dim = char_jacobi_trudi(lambda, ones);
    const Rational expected = hook_content_dimension(lambda, N);
    CHECK(dim == expected);
    CHECK(dim.to_rational() > 0);
    CHECK(dim.to_rational().get_den() == 1);
  }
}
