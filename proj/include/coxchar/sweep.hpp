#pragma once

#include "coxchar/factorization.hpp"
#include "coxchar/verify.hpp"

namespace coxchar {

/*
 * Batch verification kernels. Each item of a sweep is independent, so the
 * parallel path fans items out with OpenMP; per-item seed streams are forked
 * from (seed, shape index, item index), which makes the serial and parallel
 * paths produce identical reports. The serial path is the reference the
 * tests compare against, and the bench tool times the two side by side.
 */

struct SweepItem {
  SweepShape shape;
  VerificationReport report;
};

struct SweepReport {
  TrialConfig config;
  std::vector<SweepItem> items;
  long vanishing = 0;
  long factoring = 0;
  bool all_ok = false;
};

// Random-weight verification sweep of the factorization identity over the
// configured shapes.
SweepReport theorem2_sweep(const TrialConfig& config, Execution exec = Execution::serial);

struct KostantSample {
  Weight lambda;
  int value = 0;
  int predicted = 0;
  bool ok = false;
};

struct KostantReport {
  long n = 2;
  std::uint64_t seed = 0;
  std::vector<KostantSample> samples;
  long histogram[3] = {0, 0, 0};  // counts of -1, 0, +1
  bool all_ok = false;
};

// Samples random weights of length n and checks that the character value at
// the Coxeter point lies in {-1, 0, 1} and matches the m = 1 factorization
// prediction (sign, or 0 when vanishing).
KostantReport kostant_scan(long n, long samples, long long lo, long long hi, std::uint64_t seed,
                           Execution exec = Execution::serial,
                           long max_retries = kDefaultMaxRetries);

}  // namespace coxchar
