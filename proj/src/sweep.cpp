#include "coxchar/sweep.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxchar {

namespace {

// Purpose tags keeping weight draws and trial draws on disjoint streams.
constexpr std::uint64_t kWeightTag = 0x57454947485453ull;
constexpr std::uint64_t kTrialTag = 0x545249414C53ull;
constexpr std::uint64_t kKostantTag = 0x4B4F5354414E54ull;

}  // namespace

SweepReport theorem2_sweep(const TrialConfig& config, Execution exec) {
  if (config.shapes.empty()) throw std::invalid_argument("sweep needs at least one shape");
  if (config.weights_per_shape < 1 || config.trials < 1) {
    throw std::invalid_argument("sweep needs positive weight and trial counts");
  }

  SweepReport report;
  report.config = config;
  const long per_shape = config.weights_per_shape;
  const long total = static_cast<long>(config.shapes.size()) * per_shape;
  report.items.resize(static_cast<std::size_t>(total),
                      SweepItem{{}, VerificationReport{Weight({0}), 1, 1, 0, {}, {}, false}});

  const SeedStream root(config.seed);
  auto run_one = [&](long flat) {
    const long shape_idx = flat / per_shape;
    const long item_idx = flat % per_shape;
    const SweepShape shape = config.shapes[static_cast<std::size_t>(shape_idx)];

    SeedStream wstream = root.fork(kWeightTag, static_cast<std::uint64_t>(shape_idx),
                                   static_cast<std::uint64_t>(item_idx));
    const Weight lambda =
        random_weight(shape.m * shape.n, config.entry_lo, config.entry_hi, wstream);
    const std::uint64_t trial_seed = root.fork(kTrialTag, static_cast<std::uint64_t>(shape_idx),
                                               static_cast<std::uint64_t>(item_idx))
                                         .next_u64();
    report.items[static_cast<std::size_t>(flat)] =
        SweepItem{shape, verify_identity(lambda, shape.m, shape.n, config.trials, trial_seed,
                                         Execution::serial, config.height)};
  };

  if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long flat = 0; flat < total; ++flat) run_one(flat);
  } else {
    for (long flat = 0; flat < total; ++flat) run_one(flat);
  }

  report.all_ok = true;
  for (const auto& item : report.items) {
    if (!item.report.all_ok) report.all_ok = false;
    if (item.report.factorization.vanishes) {
      ++report.vanishing;
    } else {
      ++report.factoring;
    }
  }
  return report;
}

KostantReport kostant_scan(long n, long samples, long long lo, long long hi, std::uint64_t seed,
                           Execution exec, long max_retries) {
  if (n < 1) throw std::invalid_argument("kostant_scan needs n >= 1");
  if (samples < 1) throw std::invalid_argument("kostant_scan needs at least one sample");

  KostantReport report;
  report.n = n;
  report.seed = seed;
  report.samples.resize(static_cast<std::size_t>(samples), KostantSample{Weight({0}), 0, 0, false});

  const SeedStream root(seed);
  auto run_one = [&](long idx) {
    SeedStream stream = root.fork(kKostantTag, static_cast<std::uint64_t>(idx));
    const Weight lambda = random_weight(n, lo, hi, stream);
    KostantSample sample{lambda, 0, 0, false};
    const FactorizationResult fact = factorize(lambda, 1, n, max_retries);
    sample.predicted = fact.vanishes ? 0 : *fact.sign;
    sample.value = kostant_value(lambda, n);
    sample.ok = (sample.value == sample.predicted);
    report.samples[static_cast<std::size_t>(idx)] = std::move(sample);
  };

  if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < samples; ++idx) run_one(idx);
  } else {
    for (long idx = 0; idx < samples; ++idx) run_one(idx);
  }

  report.all_ok = true;
  for (const auto& s : report.samples) {
    ++report.histogram[s.value + 1];
    if (!s.ok) report.all_ok = false;
  }
  return report;
}

}  // namespace coxchar
