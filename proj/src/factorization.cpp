#include "coxchar/factorization.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coxchar {

namespace {

constexpr long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

std::vector<Rational> power_tuple(const std::vector<Rational>& t, long n) {
  std::vector<Rational> out;
  out.reserve(t.size());
  for (const auto& ti : t) out.push_back(rational_pow(ti, n));
  return out;
}

// sign * prod_i Theta_{mu_i}(xs), at the conductor of xs.
CycloNumber factored_side(const FactorizationResult& fact, const std::vector<CycloNumber>& xs) {
  CycloNumber prod = CycloNumber::one(xs.front().conductor());
  for (const auto& mu : fact.mus) prod *= character_at(mu, xs);
  if (fact.sign && *fact.sign < 0) prod = -prod;
  return prod;
}

Weight sym_weight(long k, long N) {
  std::vector<long long> e(static_cast<std::size_t>(N), 0);
  e[0] = k;
  return Weight(std::move(e));
}

Weight ext_weight(long k, long N) {
  if (k > N) throw std::invalid_argument("exterior power beyond the dimension");
  std::vector<long long> e(static_cast<std::size_t>(N), 0);
  for (long i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = 1;
  return Weight(std::move(e));
}

}  // namespace

FactorizationResult factorize(const Weight& lambda, long m, long n, long max_retries) {
  ResidueCheck rc = residue_condition(lambda, m, n);
  FactorizationResult out;
  out.classes = std::move(rc.classes);
  out.vanishes = !rc.holds;
  if (out.vanishes) return out;

  const Staircase delta{m};
  const std::vector<long long> staircase = delta.entries();
  out.mus.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const auto& cls = out.classes.classes[static_cast<std::size_t>(i)];
    std::vector<long long> mu(cls.size());
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const long long shifted = cls[k] - i;
      if (shifted % n != 0) throw std::logic_error("residue class member not congruent to its label");
      mu[k] = shifted / n - staircase[k];
    }
    out.mus.emplace_back(std::move(mu));  // Weight ctor re-checks monotonicity
  }
  out.sign = determine_sign(lambda, m, n, out, max_retries);
  return out;
}

int determine_sign(const Weight& lambda, long m, long n, const FactorizationResult& result,
                   long max_retries) {
  if (result.vanishes) throw std::invalid_argument("no sign in the vanishing case");
  if (m > static_cast<long>(std::size(kPrimes))) {
    throw std::invalid_argument("sign determination supports m up to 16");
  }
  for (long attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) t.emplace_back(kPrimes[i] + attempt);

    const CycloNumber lhs = twisted_character(lambda, TwistedPoint::from_rationals(t, n));
    CycloNumber rhs = CycloNumber::one(1);
    for (const auto& mu : result.mus) rhs *= character_at(mu, power_tuple(t, n));
    if (rhs.is_zero()) continue;

    const CycloNumber lifted = rhs.lifted(lhs.conductor());
    if (lhs == lifted) return 1;
    if (lhs == -lifted) return -1;
    throw std::logic_error("character ratio is not +-1 at t = " + t.front().get_str() +
                           ",...; factorization identity violated");
  }
  throw std::logic_error("no valid evaluation point for sign determination");
}

CharacterValue twisted_character(const Weight& lambda, const TwistedPoint& p) {
  if (static_cast<long>(lambda.size()) != p.m() * p.twist_order()) {
    throw std::invalid_argument("weight length must equal m * twist_order");
  }
  return character_at(lambda, eigenvalues_of_twisted_point(p));
}

namespace {

TrialRecord run_identity_trial(const Weight& lambda, long /*m*/, long n,
                               const FactorizationResult& fact, std::vector<Rational> t) {
  TrialRecord rec{std::move(t), CycloNumber(), CycloNumber(), false};
  const TwistedPoint point = TwistedPoint::from_rationals(rec.t, n);
  rec.lhs = twisted_character(lambda, point);
  if (fact.vanishes) {
    rec.rhs = CycloNumber::zero(rec.lhs.conductor());
  } else {
    rec.rhs = factored_side(fact, to_cyclo(power_tuple(rec.t, n))).lifted(rec.lhs.conductor());
  }
  rec.ok = (rec.lhs == rec.rhs);
  return rec;
}

}  // namespace

VerificationReport verify_identity(const Weight& lambda, long m, long n, long trials,
                                   std::uint64_t seed, Execution exec, long height,
                                   long max_retries) {
  if (trials < 1) throw std::invalid_argument("verify_identity needs at least one trial");
  VerificationReport report{lambda, m, n, seed, factorize(lambda, m, n, max_retries), {}, false};
  report.trials.resize(static_cast<std::size_t>(trials),
                       TrialRecord{{}, CycloNumber(), CycloNumber(), false});

  const SeedStream root(seed);
  auto run_one = [&](long idx) {
    SeedStream stream = root.fork(static_cast<std::uint64_t>(idx));
    std::vector<Rational> t = random_regular_tuple(m, n, height, stream);
    report.trials[static_cast<std::size_t>(idx)] =
        run_identity_trial(lambda, m, n, report.factorization, std::move(t));
  };

  if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < trials; ++idx) run_one(idx);
  } else {
    for (long idx = 0; idx < trials; ++idx) run_one(idx);
  }

  report.all_ok = std::all_of(report.trials.begin(), report.trials.end(),
                              [](const TrialRecord& r) { return r.ok; });
  return report;
}

MatrixTuple::MatrixTuple(std::vector<CycloMatrix> matrices) : gs(std::move(matrices)) {
  if (gs.empty()) throw std::invalid_argument("matrix tuple must be nonempty");
  const long size = gs.front().rows();
  const long conductor = gs.front().conductor();
  for (const auto& g : gs) {
    if (g.rows() != g.cols() || g.rows() != size) {
      throw std::invalid_argument("matrix tuple members must be square of one size");
    }
    if (g.conductor() != conductor) {
      throw std::invalid_argument("matrix tuple members must share a conductor");
    }
  }
}

CycloMatrix norm_map(const MatrixTuple& g) {
  CycloMatrix out = g.gs.front();
  for (std::size_t k = 1; k < g.gs.size(); ++k) out = out * g.gs[k];
  return out;
}

MatrixTuple twisted_conjugate(const MatrixTuple& g, const MatrixTuple& h) {
  if (g.count() != h.count() || g.block_size() != h.block_size()) {
    throw std::invalid_argument("twisted conjugation needs tuples of matching shape");
  }
  const std::size_t n = g.gs.size();
  std::vector<CycloMatrix> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(h.gs[k] * g.gs[k] * inverse(h.gs[(k + 1) % n]));
  }
  return MatrixTuple(std::move(out));
}

VerificationReport verify_general_form(const Weight& lambda, long m, long n, long trials,
                                       std::uint64_t seed, long height, long max_retries) {
  if (trials < 1) throw std::invalid_argument("verify_general_form needs at least one trial");
  VerificationReport report{lambda, m, n, seed, factorize(lambda, m, n, max_retries), {}, false};
  report.trials.reserve(static_cast<std::size_t>(trials));

  const SeedStream root(seed);
  for (long idx = 0; idx < trials; ++idx) {
    SeedStream stream = root.fork(static_cast<std::uint64_t>(idx));

    // Diagonal entries of the norm are forced to the exact n-th powers
    // s_k^n by solving for the last tuple member.
    std::vector<Rational> s;
    s.reserve(static_cast<std::size_t>(m));
    for (long k = 0; k < m; ++k) s.push_back(random_rational(height, stream));

    std::vector<CycloMatrix> gs;
    std::vector<Rational> last(static_cast<std::size_t>(m));
    for (long k = 0; k < m; ++k) last[static_cast<std::size_t>(k)] = rational_pow(s[static_cast<std::size_t>(k)], n);
    for (long j = 0; j + 1 < n; ++j) {
      std::vector<CycloNumber> diag;
      diag.reserve(static_cast<std::size_t>(m));
      for (long k = 0; k < m; ++k) {
        Rational d = random_rational(height, stream);
        last[static_cast<std::size_t>(k)] /= d;
        diag.emplace_back(d, 1);
      }
      gs.push_back(CycloMatrix::diagonal(diag));
    }
    gs.push_back(CycloMatrix::diagonal(to_cyclo(last)));

    const MatrixTuple tuple(std::move(gs));
    const std::vector<CycloNumber> norm_diag = norm_map(tuple).diagonal_entries();
    for (long k = 0; k < m; ++k) {
      if (norm_diag[static_cast<std::size_t>(k)] != rational_pow(s[static_cast<std::size_t>(k)], n)) {
        throw std::logic_error("norm of the constructed tuple is not the prescribed n-th power");
      }
    }

    TrialRecord rec{std::move(s), CycloNumber(), CycloNumber(), false};
    // g x sigma has eigenvalues {s_k zeta_n^j}.
    rec.lhs = twisted_character(lambda, TwistedPoint::from_rationals(rec.t, n));
    if (report.factorization.vanishes) {
      rec.rhs = CycloNumber::zero(rec.lhs.conductor());
    } else {
      rec.rhs = factored_side(report.factorization, norm_diag).lifted(rec.lhs.conductor());
    }
    rec.ok = (rec.lhs == rec.rhs);
    report.trials.push_back(std::move(rec));
  }

  report.all_ok = std::all_of(report.trials.begin(), report.trials.end(),
                              [](const TrialRecord& r) { return r.ok; });
  return report;
}

BlockDetResult block_det_identity_check(const std::vector<CycloMatrix>& xs) {
  if (xs.empty()) throw std::invalid_argument("block determinant needs at least one block");
  const long n = static_cast<long>(xs.size());
  const long m = xs.front().rows();
  for (const auto& x : xs) {
    if (x.rows() != m || x.cols() != m) {
      throw std::invalid_argument("blocks must be square of one shared size");
    }
  }

  long L = n;
  for (const auto& x : xs) L = lcm_long(L, x.conductor());
  const CycloNumber omega = root_of_unity(L, L / n);

  CycloMatrix big(m * n, m * n, L);
  for (long p = 0; p < n; ++p) {
    const CycloMatrix block = xs[static_cast<std::size_t>(p)].lifted(L);
    for (long j = 0; j < n; ++j) {
      const CycloNumber scale = omega.pow((n - 1 - p) * j);
      for (long r = 0; r < m; ++r) {
        for (long c = 0; c < m; ++c) {
          big.set(p * m + r, j * m + c, scale * block.at(r, c));
        }
      }
    }
  }

  BlockDetResult out{det_exact(big), CycloNumber::one(L), CycloNumber::one(L), false};
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      out.c *= (omega.pow(i) - omega.pow(j)).pow(m);
    }
  }
  out.rhs = out.c;
  for (const auto& x : xs) out.rhs *= det_exact(x.lifted(L));
  out.ok = (out.lhs == out.rhs);
  return out;
}

bool cocharacter_test(const Weight& lambda, long m, long n) {
  if (static_cast<long>(lambda.size()) != m * n) {
    throw std::invalid_argument("weight length must equal m*n");
  }
  std::vector<CycloNumber> values;
  values.reserve(lambda.size());
  for (long long a : add_staircase(lambda)) {
    values.push_back(root_of_unity(n, static_cast<long>(a % n)));
  }
  for (long r = 0; r < n; ++r) {
    const CycloNumber target = root_of_unity(n, r);
    long count = 0;
    for (const auto& v : values) {
      if (v == target) ++count;
    }
    if (count != m) return false;
  }
  return true;
}

int kostant_value(const Weight& lambda, long n) {
  if (static_cast<long>(lambda.size()) != n) {
    throw std::invalid_argument("kostant_value needs |lambda| = n (the m = 1 case)");
  }
  const CycloNumber value =
      twisted_character(lambda, TwistedPoint::from_rationals({Rational(1)}, n));
  if (!value.is_rational()) {
    throw std::logic_error("Coxeter character value is not rational: " + value.str());
  }
  const Rational r = value.to_rational();
  if (r.get_den() != 1 || r < -1 || r > 1) {
    throw std::logic_error("Coxeter character value outside {-1,0,1}: " + rational_str(r));
  }
  return static_cast<int>(r.get_num().get_si());
}

CheckResult sym_lambda_check(SymKind kind, long k, long m, long n, const std::vector<Rational>& t) {
  if (n != 2) throw std::invalid_argument("sym_lambda_check is about the order-2 twist");
  if (static_cast<long>(t.size()) != m) throw std::invalid_argument("t must have m coordinates");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (kind == SymKind::ext && k > 2 * m) {
    throw std::invalid_argument("exterior power degree must be at most 2m");
  }

  const Weight weight = kind == SymKind::sym ? sym_weight(k, 2 * m) : ext_weight(k, 2 * m);
  CheckResult out{twisted_character(weight, TwistedPoint::from_rationals(t, 2)), CycloNumber(), false};

  if (k % 2 != 0) {
    out.rhs = CycloNumber::zero(1);
  } else {
    const long l = k / 2;
    const std::vector<Rational> squares = power_tuple(t, 2);
    const Weight factor = kind == SymKind::sym ? sym_weight(l, m) : ext_weight(l, m);
    out.rhs = character_at(factor, squares);
    if (kind == SymKind::ext && l % 2 != 0) out.rhs = -out.rhs;
  }
  out.rhs = out.rhs.lifted(out.lhs.conductor());
  out.ok = (out.lhs == out.rhs);
  return out;
}

CheckResult siegel_levi_check(long m, long k, const std::vector<Rational>& t) {
  if (static_cast<long>(t.size()) != m) throw std::invalid_argument("t must have m coordinates");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  for (const auto& ti : t) {
    if (ti == 0) throw std::invalid_argument("t coordinates must be nonzero");
  }

  std::vector<Rational> evals;
  evals.reserve(static_cast<std::size_t>(4 * m));
  for (const auto& ti : t) evals.push_back(ti);
  for (const auto& ti : t) evals.push_back(rational_pow(ti, -1));
  for (const auto& ti : t) evals.push_back(-ti);
  for (const auto& ti : t) evals.push_back(-rational_pow(ti, -1));

  CheckResult out{character_at(sym_weight(k, 4 * m), evals), CycloNumber(), false};
  if (k % 2 != 0) {
    out.rhs = CycloNumber::zero(1);
  } else {
    std::vector<Rational> squares;
    squares.reserve(static_cast<std::size_t>(2 * m));
    for (const auto& ti : t) squares.push_back(rational_pow(ti, 2));
    for (const auto& ti : t) squares.push_back(rational_pow(ti, -2));
    out.rhs = character_at(sym_weight(k / 2, 2 * m), squares);
  }
  out.ok = (out.lhs == out.rhs);
  return out;
}

}  // namespace coxchar
