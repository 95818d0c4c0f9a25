#include "coxchar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxchar {

namespace {

// Degree with zero-trimming; the zero polynomial reports -1.
template <typename T>
long poly_degree(const std::vector<T>& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

// Exact division of integer polynomials, used only where the quotient is
// known to be integral (building Phi_L as (x^L - 1) / prod Phi_d).
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  long dn = poly_degree(num);
  long dd = poly_degree(den);
  if (dd < 0) throw std::logic_error("polynomial division by zero");
  std::vector<Integer> quot(static_cast<std::size_t>(dn - dd + 1), Integer(0));
  const Integer& lead = den[static_cast<std::size_t>(dd)];
  for (long k = dn - dd; k >= 0; --k) {
    Integer q = num[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (long j = 0; j <= dd; ++j) {
      num[static_cast<std::size_t>(k + j)] -= q * den[static_cast<std::size_t>(j)];
    }
  }
  if (poly_degree(num) >= 0) throw std::logic_error("inexact polynomial division");
  return quot;
}

// Per-conductor reduction data: Phi_L and the table of x^k mod Phi_L for
// every exponent any operation can produce (products of reduced elements
// need 2*phi-2, root powers need L-1, lifts need at most target-1).
struct ConductorContext {
  long conductor = 1;
  long degree = 1;
  std::vector<Integer> minimal_poly;
  std::vector<std::vector<Integer>> power_table;  // power_table[k] = x^k mod Phi_L
};

ConductorContext build_context(long L) {
  ConductorContext ctx;
  ctx.conductor = L;
  ctx.minimal_poly = cyclotomic_polynomial(L);
  ctx.degree = poly_degree(ctx.minimal_poly);

  const long d = ctx.degree;
  const long max_power = std::max<long>(L - 1, 2 * d - 2);
  ctx.power_table.resize(static_cast<std::size_t>(max_power) + 1,
                         std::vector<Integer>(static_cast<std::size_t>(d), Integer(0)));
  ctx.power_table[0][0] = 1;
  for (long k = 1; k <= max_power; ++k) {
    const auto& prev = ctx.power_table[static_cast<std::size_t>(k - 1)];
    auto& cur = ctx.power_table[static_cast<std::size_t>(k)];
    const Integer carry = prev[static_cast<std::size_t>(d - 1)];
    // x^d == -(Phi_L - x^d), Phi_L monic.
    cur[0] = -carry * ctx.minimal_poly[0];
    for (long j = 1; j < d; ++j) {
      cur[static_cast<std::size_t>(j)] =
          prev[static_cast<std::size_t>(j - 1)] - carry * ctx.minimal_poly[static_cast<std::size_t>(j)];
    }
  }
  return ctx;
}

const ConductorContext& context_for(long L) {
  thread_local std::map<long, std::unique_ptr<ConductorContext>> cache;
  auto it = cache.find(L);
  if (it == cache.end()) {
    it = cache.emplace(L, std::make_unique<ConductorContext>(build_context(L))).first;
  }
  return *it->second;
}

// Reduces a raw coefficient vector (any length covered by the power table)
// to the canonical basis of Q(zeta_L).
std::vector<Rational> reduce_raw(const std::vector<Rational>& raw, const ConductorContext& ctx) {
  const long d = ctx.degree;
  std::vector<Rational> out(static_cast<std::size_t>(d), Rational(0));
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    if (k < static_cast<std::size_t>(d)) {
      out[k] += raw[k];
    } else {
      if (k >= ctx.power_table.size()) throw std::logic_error("power table exhausted");
      const auto& row = ctx.power_table[k];
      for (long j = 0; j < d; ++j) {
        if (row[static_cast<std::size_t>(j)] != 0) {
          out[static_cast<std::size_t>(j)] += raw[k] * row[static_cast<std::size_t>(j)];
        }
      }
    }
  }
  return out;
}

void require_same_conductor(const CycloNumber& a, const CycloNumber& b) {
  if (a.conductor() != b.conductor()) {
    throw std::invalid_argument("conductor mismatch (" + std::to_string(a.conductor()) + " vs " +
                                std::to_string(b.conductor()) + "); lift to a common conductor first");
  }
}

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi of non-positive argument");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

std::vector<Integer> cyclotomic_polynomial(long L) {
  if (L < 1) throw std::invalid_argument("cyclotomic polynomial needs L >= 1");
  // Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d.
  std::vector<Integer> num(static_cast<std::size_t>(L) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(L)] = 1;
  for (long d = 1; d < L; ++d) {
    if (L % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  num.resize(static_cast<std::size_t>(poly_degree(num)) + 1);
  return num;
}

CycloNumber::CycloNumber(const Rational& value, long conductor) : conductor_(conductor) {
  const auto& ctx = context_for(conductor);
  coeffs_.assign(static_cast<std::size_t>(ctx.degree), Rational(0));
  coeffs_[0] = value;
}

CycloNumber CycloNumber::from_coeffs(long conductor, std::vector<Rational> coeffs) {
  const auto& ctx = context_for(conductor);
  if (static_cast<long>(coeffs.size()) != ctx.degree) {
    throw std::invalid_argument("coefficient vector must have length phi(conductor)");
  }
  CycloNumber out;
  out.conductor_ = conductor;
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational CycloNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("value is not rational: " + str());
  return coeffs_[0];
}

CycloNumber CycloNumber::lifted(long target) const { return lift_conductor(*this, target); }

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
  require_same_conductor(a, b);
  CycloNumber out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
  require_same_conductor(a, b);
  CycloNumber out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  require_same_conductor(a, b);
  const auto& ctx = context_for(a.conductor_);
  const std::size_t d = a.coeffs_.size();
  std::vector<Rational> raw(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycloNumber::from_coeffs(a.conductor_, reduce_raw(raw, ctx));
}

CycloNumber operator*(const CycloNumber& a, const Rational& s) {
  CycloNumber out = a;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // Extended Euclid in Q[x] against Phi_L; Phi_L is irreducible over Q, so
  // the gcd is a nonzero constant.
  const auto& ctx = context_for(conductor_);
  std::vector<Rational> r0(ctx.minimal_poly.size());
  for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(ctx.minimal_poly[i]);
  std::vector<Rational> r1 = coeffs_;
  std::vector<Rational> t0{Rational(0)};
  std::vector<Rational> t1{Rational(1)};

  while (poly_degree(r1) > 0) {
    long d0 = poly_degree(r0);
    long d1 = poly_degree(r1);
    std::vector<Rational> q(static_cast<std::size_t>(d0 - d1 + 1), Rational(0));
    std::vector<Rational> rem = r0;
    for (long k = d0 - d1; k >= 0; --k) {
      Rational f = rem[static_cast<std::size_t>(k + d1)] / r1[static_cast<std::size_t>(d1)];
      q[static_cast<std::size_t>(k)] = f;
      if (f == 0) continue;
      for (long j = 0; j <= d1; ++j) {
        rem[static_cast<std::size_t>(k + j)] -= f * r1[static_cast<std::size_t>(j)];
      }
    }
    // t_next = t0 - q * t1
    std::vector<Rational> tn(std::max(t0.size(), q.size() + t1.size()), Rational(0));
    for (std::size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < t1.size(); ++j) tn[i + j] -= q[i] * t1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }

  if (poly_degree(r1) != 0) throw std::logic_error("gcd with irreducible Phi_L must be constant");
  const Rational g = r1[0];
  std::vector<Rational> raw(t1.size(), Rational(0));
  for (std::size_t i = 0; i < t1.size(); ++i) raw[i] = t1[i] / g;
  return CycloNumber::from_coeffs(conductor_, reduce_raw(raw, ctx));
}

CycloNumber CycloNumber::pow(long exp) const {
  if (exp == 0) return CycloNumber::one(conductor_);
  CycloNumber base = exp < 0 ? inverse() : *this;
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-(exp + 1)) + 1ul : static_cast<unsigned long>(exp);
  CycloNumber acc = CycloNumber::one(conductor_);
  while (e > 0) {
    if (e & 1ul) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  require_same_conductor(a, b);
  return a.coeffs_ == b.coeffs_;
}

bool CycloNumber::operator==(const Rational& r) const {
  if (coeffs_[0] != r) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::string CycloNumber::str() const {
  if (is_rational()) return rational_str(coeffs_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << rational_str(coeffs_[0]);
    } else {
      out << rational_str(coeffs_[k]) << "*z" << conductor_ << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

CycloNumber root_of_unity(long L, long k) {
  if (L < 1) throw std::invalid_argument("root_of_unity needs L >= 1");
  long e = k % L;
  if (e < 0) e += L;
  const auto& ctx = context_for(L);
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
  raw[static_cast<std::size_t>(e)] = 1;
  return CycloNumber::from_coeffs(L, reduce_raw(raw, ctx));
}

CycloNumber lift_conductor(const CycloNumber& x, long target) {
  const long L = x.conductor();
  if (target < 1 || target % L != 0) {
    throw std::invalid_argument("conductor " + std::to_string(L) + " does not divide lift target " +
                                std::to_string(target));
  }
  if (target == L) return x;
  const long step = target / L;  // zeta_L = zeta_target^step
  const auto& ctx = context_for(target);
  std::vector<Rational> raw(static_cast<std::size_t>((x.coeffs().size() - 1) * step) + 1, Rational(0));
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    raw[k * static_cast<std::size_t>(step)] = x.coeffs()[k];
  }
  return CycloNumber::from_coeffs(target, reduce_raw(raw, ctx));
}

std::vector<CycloNumber> to_cyclo(const std::vector<Rational>& values, long conductor) {
  std::vector<CycloNumber> out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(v, conductor);
  return out;
}

std::vector<CycloNumber> lift_all(const std::vector<CycloNumber>& values, long target) {
  std::vector<CycloNumber> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.lifted(target));
  return out;
}

}  // namespace coxchar
