#include "coxchar/schur.hpp"

#include <stdexcept>

namespace coxchar {

namespace {

long common_conductor(const std::vector<CycloNumber>& xs) {
  if (xs.empty()) throw std::invalid_argument("empty eigenvalue list");
  long L = xs.front().conductor();
  for (const auto& x : xs) {
    if (x.conductor() != L) {
      throw std::invalid_argument("eigenvalues must share one conductor; lift first");
    }
  }
  return L;
}

CycloNumber product_of(const std::vector<CycloNumber>& xs, long L) {
  CycloNumber p = CycloNumber::one(L);
  for (const auto& x : xs) p *= x;
  return p;
}

// Shift lambda so all entries are non-negative; returns the shift s <= 0 to
// compensate with (prod xs)^s afterwards.
struct Shifted {
  Weight lambda;
  long long s;
};

Shifted det_shift(const Weight& lambda, const std::vector<CycloNumber>& xs) {
  long long last = lambda[lambda.size() - 1];
  long long s = last < 0 ? last : 0;
  if (s < 0) {
    for (const auto& x : xs) {
      if (x.is_zero()) {
        throw std::domain_error("zero eigenvalue with negative weight entries");
      }
    }
  }
  return {lambda.shifted(-s), s};
}

}  // namespace

CycloNumber weyl_numerator(const Weight& lambda, const std::vector<CycloNumber>& xs) {
  const long N = static_cast<long>(lambda.size());
  if (static_cast<long>(xs.size()) != N) {
    throw std::invalid_argument("weight length and eigenvalue count differ");
  }
  const long L = common_conductor(xs);
  const std::vector<long long> exps = add_staircase(lambda);
  if (exps.back() < 0) {
    throw std::domain_error("negative exponent in Weyl numerator; det-shift first");
  }
  CycloMatrix m(N, N, L);
  for (long c = 0; c < N; ++c) {
    // exps is strictly decreasing; walk it from the bottom so each cell costs
    // one multiplication beyond the previous power.
    CycloNumber value = xs[static_cast<std::size_t>(c)].pow(exps[static_cast<std::size_t>(N - 1)]);
    m.set(N - 1, c, value);
    for (long r = N - 2; r >= 0; --r) {
      long long gap = exps[static_cast<std::size_t>(r)] - exps[static_cast<std::size_t>(r + 1)];
      value = value * xs[static_cast<std::size_t>(c)].pow(gap);
      m.set(r, c, value);
    }
  }
  return det_exact(m);
}

CycloNumber weyl_denominator(const std::vector<CycloNumber>& xs) {
  const long L = common_conductor(xs);
  CycloNumber out = CycloNumber::one(L);
  for (std::size_t r = 0; r < xs.size(); ++r) {
    for (std::size_t s = r + 1; s < xs.size(); ++s) {
      out *= xs[r] - xs[s];
    }
  }
  return out;
}

std::vector<CycloNumber> homogeneous_series(const std::vector<CycloNumber>& xs, long maxdeg) {
  const long L = common_conductor(xs);
  std::vector<CycloNumber> h(static_cast<std::size_t>(maxdeg) + 1, CycloNumber::zero(L));
  h[0] = CycloNumber::one(L);
  for (const auto& x : xs) {
    // multiply the series by 1/(1 - x*u): h_k += x * h_{k-1}, ascending k.
    for (long k = 1; k <= maxdeg; ++k) {
      h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
    }
  }
  return h;
}

CharacterValue char_bialternant(const Weight& lambda, const std::vector<CycloNumber>& xs) {
  if (lambda.size() != xs.size()) {
    throw std::invalid_argument("weight length and eigenvalue count differ");
  }
  if (!pairwise_distinct(xs)) throw std::domain_error("irregular point: repeated eigenvalue");
  const long L = common_conductor(xs);
  const auto [shifted, s] = det_shift(lambda, xs);
  CycloNumber value = weyl_numerator(shifted, xs) / weyl_denominator(xs);
  if (s != 0) value *= product_of(xs, L).pow(s);
  return value;
}

CharacterValue char_jacobi_trudi(const Weight& lambda, const std::vector<CycloNumber>& xs) {
  const long N = static_cast<long>(lambda.size());
  if (static_cast<long>(xs.size()) != N) {
    throw std::invalid_argument("weight length and eigenvalue count differ");
  }
  const long L = common_conductor(xs);
  const auto [shifted, s] = det_shift(lambda, xs);

  const long long top = shifted[0];
  const std::vector<CycloNumber> h = homogeneous_series(xs, top + N);
  CycloMatrix m(N, N, L);
  for (long r = 0; r < N; ++r) {
    for (long c = 0; c < N; ++c) {
      long long idx = shifted[static_cast<std::size_t>(r)] - r + c;
      if (idx >= 0) m.set(r, c, h[static_cast<std::size_t>(idx)]);
    }
  }
  CycloNumber value = det_exact(m);
  if (s != 0) value *= product_of(xs, L).pow(s);
  return value;
}

CharacterValue character_at(const Weight& lambda, const std::vector<CycloNumber>& xs) {
  return pairwise_distinct(xs) ? char_bialternant(lambda, xs) : char_jacobi_trudi(lambda, xs);
}

CharacterValue character_at(const Weight& lambda, const std::vector<Rational>& xs) {
  return character_at(lambda, to_cyclo(xs));
}

bool pairwise_distinct(const std::vector<CycloNumber>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) return false;
    }
  }
  return true;
}

}  // namespace coxchar
