#include "coxchar/weights.hpp"

#include <sstream>
#include <stdexcept>

namespace coxchar {

Weight::Weight(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("weight must have at least one entry");
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] < entries_[i + 1]) {
      throw std::invalid_argument("weight entries must be weakly decreasing");
    }
  }
}

Weight Weight::shifted(long long c) const {
  std::vector<long long> e = entries_;
  for (auto& v : e) v += c;
  return Weight(std::move(e));
}

Weight Weight::parse(std::string_view csv) {
  std::vector<long long> entries;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string token(csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos));
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weight entry: '" + token + "'");
    }
    if (used != token.size() || token.empty()) {
      throw std::invalid_argument("malformed weight entry: '" + token + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Weight(std::move(entries));
}

std::string Weight::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ",";
    out << entries_[i];
  }
  return out.str();
}

std::vector<long long> Staircase::entries() const {
  if (length < 1) throw std::invalid_argument("staircase length must be positive");
  std::vector<long long> out(static_cast<std::size_t>(length));
  for (long i = 0; i < length; ++i) out[static_cast<std::size_t>(i)] = length - 1 - i;
  return out;
}

std::vector<long long> add_staircase(const Weight& lambda) {
  const long long n = static_cast<long long>(lambda.size());
  std::vector<long long> out(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    out[i] = lambda[i] + (n - 1 - static_cast<long long>(i));
  }
  return out;
}

ResidueCheck residue_condition(const Weight& lambda, long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("residue_condition needs m, n >= 1");
  if (static_cast<long>(lambda.size()) != m * n) {
    throw std::invalid_argument("weight length must equal m*n");
  }
  ResidueCheck out;
  out.classes.modulus = n;
  out.classes.classes.assign(static_cast<std::size_t>(n), {});
  for (long long a : add_staircase(lambda)) {
    long long r = a % n;
    if (r < 0) r += n;
    out.classes.classes[static_cast<std::size_t>(r)].push_back(a);
  }
  // add_staircase is strictly decreasing, so each class is already sorted
  // in decreasing order.
  out.holds = true;
  for (const auto& cls : out.classes.classes) {
    if (static_cast<long>(cls.size()) != m) out.holds = false;
  }
  return out;
}

TwistedPoint::TwistedPoint(std::vector<CycloNumber> t, long twist_order)
    : t_(std::move(t)), twist_order_(twist_order) {
  if (t_.empty()) throw std::invalid_argument("twisted point needs at least one coordinate");
  if (twist_order_ < 1) throw std::invalid_argument("twist order must be positive");
  long common = 1;
  for (const auto& v : t_) common = lcm_long(common, v.conductor());
  for (auto& v : t_) {
    v = v.lifted(common);
    if (v.is_zero()) throw std::invalid_argument("twisted point coordinates must be nonzero");
  }
}

TwistedPoint TwistedPoint::from_rationals(const std::vector<Rational>& t, long twist_order) {
  return TwistedPoint(to_cyclo(t), twist_order);
}

std::vector<CycloNumber> eigenvalues_of_twisted_point(const TwistedPoint& p) {
  const long n = p.twist_order();
  const long L = lcm_long(p.t().front().conductor(), n);
  const std::vector<CycloNumber> t = lift_all(p.t(), L);
  const CycloNumber omega = root_of_unity(L, L / n);

  std::vector<CycloNumber> evals;
  evals.reserve(t.size() * static_cast<std::size_t>(n));
  CycloNumber power = CycloNumber::one(L);
  for (long j = 0; j < n; ++j) {
    for (const auto& ti : t) evals.push_back(ti * power);
    power *= omega;
  }
  return evals;
}

bool is_regular(const TwistedPoint& p) {
  std::vector<CycloNumber> powers;
  powers.reserve(p.t().size());
  for (const auto& ti : p.t()) powers.push_back(ti.pow(p.twist_order()));
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (std::size_t j = i + 1; j < powers.size(); ++j) {
      if (powers[i] == powers[j]) return false;
    }
  }
  return true;
}

long long central_character(const Weight& lambda) {
  long long sum = 0;
  for (long long v : lambda.entries()) sum += v;
  return sum;
}

}  // namespace coxchar
