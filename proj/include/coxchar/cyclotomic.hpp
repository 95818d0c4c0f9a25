#pragma once

#include <vector>

#include "coxchar/rational.hpp"

namespace coxchar {

long euler_phi(long n);
long lcm_long(long a, long b);

// Coefficients of the L-th cyclotomic polynomial Phi_L, constant term first.
// Monic with integer coefficients, degree phi(L). L must be >= 1.
std::vector<Integer> cyclotomic_polynomial(long L);

/*
 * Element of the cyclotomic field Q(zeta_L), stored as the rational
 * coefficients of 1, zeta, ..., zeta^{phi(L)-1} after reduction modulo
 * Phi_L. The reduction is canonical, so operator== decides equality of
 * values. Arithmetic requires both operands to carry the same conductor;
 * mixed-conductor code must lift explicitly (lift_conductor), which keeps
 * conductor mismatches loud instead of silently coerced.
 *
 * Values are immutable after construction and safe to share across threads.
 */
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(Rational(0), 1) {}
  explicit CycloNumber(const Rational& value, long conductor = 1);

  static CycloNumber zero(long conductor) { return CycloNumber(Rational(0), conductor); }
  static CycloNumber one(long conductor) { return CycloNumber(Rational(1), conductor); }
  // coeffs must have length phi(conductor).
  static CycloNumber from_coeffs(long conductor, std::vector<Rational> coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws std::domain_error when not rational

  // Same value in Q(zeta_target); conductor() must divide target.
  CycloNumber lifted(long target) const;

  CycloNumber operator-() const;
  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b);
  CycloNumber& operator+=(const CycloNumber& b) { return *this = *this + b; }
  CycloNumber& operator-=(const CycloNumber& b) { return *this = *this - b; }
  CycloNumber& operator*=(const CycloNumber& b) { return *this = *this * b; }

  friend CycloNumber operator*(const CycloNumber& a, const Rational& s);
  friend CycloNumber operator*(const Rational& s, const CycloNumber& a) { return a * s; }

  CycloNumber inverse() const;  // throws std::domain_error on zero
  CycloNumber pow(long exp) const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }
  bool operator==(const Rational& r) const;
  bool operator!=(const Rational& r) const { return !(*this == r); }

  // "3/2", "1 + -1*z6^1", ... with z{L} denoting a primitive L-th root.
  std::string str() const;

 private:
  long conductor_;
  std::vector<Rational> coeffs_;
};

// zeta_L^k (k taken mod L, negative k allowed).
CycloNumber root_of_unity(long L, long k);

// Same value of x in Q(zeta_target); rejects targets not divisible by the
// current conductor.
CycloNumber lift_conductor(const CycloNumber& x, long target);

// Convenience embeddings.
std::vector<CycloNumber> to_cyclo(const std::vector<Rational>& values, long conductor = 1);
std::vector<CycloNumber> lift_all(const std::vector<CycloNumber>& values, long target);

}  // namespace coxchar
