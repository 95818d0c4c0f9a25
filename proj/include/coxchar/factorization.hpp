#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxchar/matrix.hpp"
#include "coxchar/schur.hpp"
#include "coxchar/verify.hpp"
#include "coxchar/weights.hpp"

namespace coxchar {

// Default bound on evaluation-point retries during sign determination; the
// CLI overrides it from TWISTEDCHAR_MAX_RETRIES.
inline constexpr long kDefaultMaxRetries = 32;

enum class Execution { serial, parallel };

/*
 * Outcome of the factorization of a GL_{mn} character at twisted points
 * t*c_n: either the character vanishes identically (some residue class of
 * lambda + delta is not hit exactly m times), or it factors through n
 * GL_m characters with highest weights mu_0..mu_{n-1} up to a global sign.
 */
struct FactorizationResult {
  bool vanishes = false;
  ResidueClasses classes;
  std::vector<Weight> mus;   // indexed by residue class, empty when vanishing
  std::optional<int> sign;   // +1 or -1, engaged iff !vanishes
};

// Residue criterion, factor weights mu_i = sorted((a - i)/n : a in class i)
// minus delta_m, and the sign fixed by exact evaluation.
FactorizationResult factorize(const Weight& lambda, long m, long n,
                              long max_retries = kDefaultMaxRetries);

// Evaluates the ratio of the two sides of the factorization at points
// t = (2+k, 3+k, 5+k, ...) until the ratio is defined, and asserts it is
// exactly +1 or -1.
int determine_sign(const Weight& lambda, long m, long n, const FactorizationResult& result,
                   long max_retries = kDefaultMaxRetries);

// Character of the GL_{mn} irreducible with highest weight lambda at the
// twisted point; requires |lambda| = m * twist_order.
CharacterValue twisted_character(const Weight& lambda, const TwistedPoint& p);

struct TrialRecord {
  std::vector<Rational> t;
  CycloNumber lhs;
  CycloNumber rhs;
  bool ok = false;
};

struct VerificationReport {
  Weight lambda;
  long m = 1;
  long n = 1;
  std::uint64_t seed = 0;
  FactorizationResult factorization;
  std::vector<TrialRecord> trials;
  bool all_ok = false;
};

// Checks the factorization identity at `trials` random regular rational
// points (vanishing weights must evaluate to exactly zero). Any mismatch is
// recorded as a counterexample in the report, not thrown. The parallel
// execution path must produce a byte-identical report.
VerificationReport verify_identity(const Weight& lambda, long m, long n, long trials,
                                   std::uint64_t seed, Execution exec = Execution::serial,
                                   long height = 10, long max_retries = kDefaultMaxRetries);

// n square matrices of one size over one conductor: an element of
// GL_m^n x sigma written in coordinates.
struct MatrixTuple {
  std::vector<CycloMatrix> gs;

  explicit MatrixTuple(std::vector<CycloMatrix> matrices);
  long block_size() const { return gs.front().rows(); }
  long count() const { return static_cast<long>(gs.size()); }
};

// Norm mapping (g_1,...,g_n) x sigma -> g_1 g_2 ... g_n.
CycloMatrix norm_map(const MatrixTuple& g);

// Twisted conjugation by an n-tuple of invertible matrices h:
// g_k -> h_k g_k h_{k+1}^{-1} (indices cyclic), under which the norm moves
// by ordinary conjugation.
MatrixTuple twisted_conjugate(const MatrixTuple& g, const MatrixTuple& h);

// Checks the general-element form of the factorization on diagonal tuples
// whose norm has exact n-th power entries s_k^n: the twisted element then
// has eigenvalues {s_k zeta_n^j} and the claim reduces to
// character(lambda) = sign * prod_i character(mu_i) at (s_1^n, ..., s_m^n).
VerificationReport verify_general_form(const Weight& lambda, long m, long n, long trials,
                                       std::uint64_t seed, long height = 10,
                                       long max_retries = kDefaultMaxRetries);

struct BlockDetResult {
  CycloNumber lhs;  // det of the omega-scaled block matrix
  CycloNumber rhs;  // c * prod det(X_i)
  CycloNumber c;    // prod_{0<=i<j<n} (omega^i - omega^j)^m
  bool ok = false;
};

// The determinant identity behind the factorization: the mn x mn matrix with
// block row p holding (omega^{e_p * 0} X_p, ..., omega^{e_p * (n-1)} X_p),
// with exponents e_p = n-1-p decreasing down the rows, has determinant
// c * det(X_0) ... det(X_{n-1}).
BlockDetResult block_det_identity_check(const std::vector<CycloMatrix>& xs);

// Equivalent root-of-unity form of the vanishing criterion: the multiset
// {zeta_n^{(lambda+delta)_k}} contains every n-th root of unity with
// multiplicity exactly m.
bool cocharacter_test(const Weight& lambda, long m, long n);

// Character value at the untwisted Coxeter point (m = 1, t = 1); always one
// of -1, 0, 1, enforced loudly.
int kostant_value(const Weight& lambda, long n);

enum class SymKind { sym, ext };

struct CheckResult {
  CycloNumber lhs;
  CycloNumber rhs;
  bool ok = false;
};

// Closed forms for Sym^k and Lambda^k of C^{2m} at points twisted by n = 2:
// zero for odd k; for k = 2l, Sym matches Sym^l and Lambda matches
// (-1)^l Lambda^l at the squared eigenvalues.
CheckResult sym_lambda_check(SymKind kind, long k, long m, long n, const std::vector<Rational>& t);

// Sym^k(C^{4m}) at eigenvalues (t_i, 1/t_i, -t_i, -1/t_i): zero for odd k,
// and Sym^l(C^{2m}) at (t_i^2, t_i^{-2}) for k = 2l.
CheckResult siegel_levi_check(long m, long k, const std::vector<Rational>& t);

}  // namespace coxchar
