// Times the verification sweep with the serial reference against the OpenMP
// kernel on the same seeded workload and cross-checks that the two reports
// are byte-identical.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "coxchar/json_io.hpp"
#include "coxchar/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace coxchar;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<SweepShape> parse_shapes(const std::string& text) {
  std::vector<SweepShape> shapes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? text.size() - pos : comma - pos);
    const std::size_t x = token.find('x');
    if (x == std::string::npos) throw std::invalid_argument("shape must look like 2x2");
    shapes.push_back(SweepShape{std::stol(token.substr(0, x)), std::stol(token.substr(x + 1))});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return shapes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP timing of the verification sweep"};
  std::string shapes_text = "1x2,1x3,1x4,2x2,3x2,2x3";
  std::string config_file;
  long weights = 40;
  long points = 3;
  std::uint64_t seed = 1;

  app.add_option("--config", config_file, "trial config as a JSON document (overrides flags)")
      ->check(CLI::ExistingFile);
  app.add_option("--shapes", shapes_text, "comma list of mxn shapes");
  app.add_option("--weights", weights, "random weights per shape");
  app.add_option("--points", points, "evaluation points per weight");
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  TrialConfig config;
  if (!config_file.empty()) {
    std::ifstream in(config_file);
    json j;
    in >> j;
    config = trial_config_from_json(j);
  } else {
    config.seed = seed;
    config.trials = points;
    config.weights_per_shape = weights;
    config.shapes = parse_shapes(shapes_text);
  }

  const long total = static_cast<long>(config.shapes.size()) * config.weights_per_shape;
  std::cout << "workload: " << total << " weights, " << config.trials << " points each\n";

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = theorem2_sweep(config, Execution::serial);
  const double serial_s = seconds_since(t0);
  std::cout << "serial reference: " << serial_s << " s  (all_ok=" << serial.all_ok << ")\n";

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  t0 = std::chrono::steady_clock::now();
  const auto parallel = theorem2_sweep(config, Execution::parallel);
  const double parallel_s = seconds_since(t0);
  std::cout << "openmp (" << threads << " threads): " << parallel_s
            << " s  (all_ok=" << parallel.all_ok << ")\n";
  std::cout << "speedup: " << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "x\n";

  const bool identical = to_json(serial).dump() == to_json(parallel).dump();
  std::cout << "reports identical: " << (identical ? "yes" : "NO") << "\n";
  return (identical && serial.all_ok && parallel.all_ok) ? 0 : 1;
}
