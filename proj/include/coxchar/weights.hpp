#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxchar/cyclotomic.hpp"

namespace coxchar {

// Highest weight of GL_N: a weakly decreasing integer tuple. Entries may be
// negative (rational representations).
class Weight {
 public:
  explicit Weight(std::vector<long long> entries);

  std::size_t size() const { return entries_.size(); }
  long long operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<long long>& entries() const { return entries_; }

  Weight shifted(long long c) const;  // lambda + c*(1,...,1)

  // CLI text format: comma-separated integers, e.g. "1,1,0,0".
  static Weight parse(std::string_view csv);
  std::string str() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<long long> entries_;
};

// The tuple (a-1, a-2, ..., 1, 0).
struct Staircase {
  long length;
  std::vector<long long> entries() const;
};

// lambda + delta_N: strictly decreasing.
std::vector<long long> add_staircase(const Weight& lambda);

// Partition of the entries of lambda + delta by residue mod n; classes[i]
// keeps the entries congruent to i, in decreasing order. Residues of
// negative entries use the non-negative representative.
struct ResidueClasses {
  long modulus = 1;
  std::vector<std::vector<long long>> classes;
};

struct ResidueCheck {
  bool holds = false;
  ResidueClasses classes;
};

// Theorem-2 criterion: every residue class mod n is hit exactly m times by
// lambda + delta_{mn}. Requires |lambda| = m*n.
ResidueCheck residue_condition(const Weight& lambda, long m, long n);

/*
 * The twisted evaluation point t*c_n: m nonzero field scalars together with
 * the twist order n. Expands to the mn eigenvalues t_i * zeta_n^j.
 */
class TwistedPoint {
 public:
  TwistedPoint(std::vector<CycloNumber> t, long twist_order);
  static TwistedPoint from_rationals(const std::vector<Rational>& t, long twist_order);

  long m() const { return static_cast<long>(t_.size()); }
  long twist_order() const { return twist_order_; }
  const std::vector<CycloNumber>& t() const { return t_; }

 private:
  std::vector<CycloNumber> t_;  // shared conductor, all nonzero
  long twist_order_;
};

// The mn eigenvalues t_i * zeta_n^j in the fixed order: j outer, i inner
// (so t=(t1,t2), n=2 expands to (t1, t2, -t1, -t2)).
std::vector<CycloNumber> eigenvalues_of_twisted_point(const TwistedPoint& p);

// True iff all mn eigenvalues are pairwise distinct, equivalently the values
// t_i^n are pairwise distinct.
bool is_regular(const TwistedPoint& p);

// Sum of the entries: the integer by which the center acts.
long long central_character(const Weight& lambda);

}  // namespace coxchar
