#pragma once

#include <cstdint>
#include <vector>

#include "coxchar/schur.hpp"
#include "coxchar/weights.hpp"

namespace coxchar {

/*
 * Deterministic seeded randomness (splitmix64). The standard <random>
 * distributions are implementation-defined, so everything here is spelled
 * out: identical seeds give identical draws on every platform, and child
 * streams forked per trial index make results independent of execution
 * order.
 */
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // Uniform on [lo, hi] by rejection sampling.
  long long uniform_int(long long lo, long long hi);
  // Child stream determined by (seed, a, b, c) only.
  SeedStream fork(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const;

 private:
  std::uint64_t state_;
};

// Weakly decreasing tuple with entries in [lo, hi], uniform over the set of
// such tuples (multisets), via the bijection with strictly increasing tuples.
Weight random_weight(long N, long long lo, long long hi, SeedStream& stream);

// Numerator in [-height, height], denominator in [1, height].
Rational random_rational(long height, SeedStream& stream, bool nonzero = true);

// m nonzero rationals with t_i^n pairwise distinct (regular twisted point);
// rejected draws are redrawn from the same stream.
std::vector<Rational> random_regular_tuple(long m, long n, long height, SeedStream& stream);

// Trial plan for randomized verification runs. Accepted from JSON or CLI.
struct SweepShape {
  long m = 1;
  long n = 2;
};

struct TrialConfig {
  std::uint64_t seed = 0;
  long trials = 3;  // evaluation points per weight
  std::vector<SweepShape> shapes;
  long weights_per_shape = 200;
  long long entry_lo = 0;
  long long entry_hi = 4;
  long height = 10;  // rational height bound for t
};

/*
 * Brute-force oracles, independent of the character engines: direct
 * expansion of the generating functions for e_k and h_k, and semistandard
 * tableau enumeration for small shapes. Derived expected values in the test
 * suites are recomputed through these rather than trusted as literals.
 */
CycloNumber oracle_elementary(long k, const std::vector<CycloNumber>& xs);
CycloNumber oracle_homogeneous(long k, const std::vector<CycloNumber>& xs);

// Sum over semistandard Young tableaux of shape lambda with entries in
// {1..|xs|} of the content monomial. Requires non-negative lambda,
// |xs| <= 3 and |lambda| <= 8.
CycloNumber oracle_tableaux(const Weight& lambda, const std::vector<CycloNumber>& xs);

}  // namespace coxchar
