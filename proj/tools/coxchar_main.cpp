// Command-line front door for the twisted-character library: evaluate
// characters, factor them at twisted Coxeter points, and run the seeded
// verification suites. --json switches every subcommand to the documented
// JSON schemas; exit status is 0 for success/verified, 1 when a
// counterexample was found, 2 for usage errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "coxchar/json_io.hpp"
#include "coxchar/sweep.hpp"
#include "coxchar/factorization.hpp"

namespace {

using namespace coxchar;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

long max_retries_from_env() {
  const char* raw = std::getenv("TWISTEDCHAR_MAX_RETRIES");
  if (raw == nullptr) return kDefaultMaxRetries;
  try {
    const long value = std::stol(raw);
    if (value < 1) throw std::invalid_argument("non-positive");
    return value;
  } catch (const std::exception&) {
    throw CLI::ValidationError("TWISTEDCHAR_MAX_RETRIES must be a positive integer");
  }
}

std::vector<Rational> parse_tuple(const std::string& csv) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string token =
        csv.substr(pos, comma == std::string::npos ? csv.size() - pos : comma - pos);
    out.push_back(parse_rational(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string value_str(const CycloNumber& v) {
  return v.is_rational() ? rational_str(v.to_rational()) : v.str();
}

void print_factorization(std::ostream& os, const Weight& lambda, long n,
                         const FactorizationResult& fact) {
  os << "lambda + delta = (";
  const auto a = add_staircase(lambda);
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")\n";
  if (fact.vanishes) {
    os << "character vanishes identically on t*c_" << n << " (residue criterion fails)\n";
  }
  for (long i = 0; i < fact.classes.modulus; ++i) {
    os << "  class " << i << " mod " << n << ": {";
    const auto& cls = fact.classes.classes[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < cls.size(); ++k) os << (k ? "," : "") << cls[k];
    os << "}";
    if (!fact.vanishes) os << "  ->  mu_" << i << " = (" << fact.mus[static_cast<std::size_t>(i)].str() << ")";
    os << "\n";
  }
  if (!fact.vanishes) {
    os << "sign = " << (*fact.sign > 0 ? "+1" : "-1") << "\n";
    os << "Theta(t*c_" << n << ") = " << (*fact.sign > 0 ? "+" : "-");
    for (long i = 0; i < n; ++i) {
      os << (i ? " * " : "") << "Theta_(" << fact.mus[static_cast<std::size_t>(i)].str() << ")(t^" << n
         << ")";
    }
    os << "\n";
  }
}

struct CommonArgs {
  std::string lambda_csv;
  std::string t_csv;
  long m = 0;
  long n = 2;
  long k = 0;
  std::string kind = "sym";
  long trials = 16;
  std::uint64_t seed = 0;
  long height = 10;
  bool json_out = false;
  bool parallel = false;
};

int run_character(const CommonArgs& args) {
  const Weight lambda = Weight::parse(args.lambda_csv);
  const std::vector<Rational> t = parse_tuple(args.t_csv);
  const CycloNumber value =
      twisted_character(lambda, TwistedPoint::from_rationals(t, args.n));
  if (args.json_out) {
    std::cout << json{{"value", to_json(value)}}.dump() << "\n";
  } else {
    std::cout << value_str(value) << "\n";
  }
  return kExitOk;
}

int run_factor(const CommonArgs& args) {
  const Weight lambda = Weight::parse(args.lambda_csv);
  const auto fact = factorize(lambda, args.m, args.n, max_retries_from_env());
  if (args.json_out) {
    std::cout << to_json(fact).dump() << "\n";
  } else {
    std::cout << "lambda = (" << lambda.str() << "), m = " << args.m << ", n = " << args.n << "\n";
    print_factorization(std::cout, lambda, args.n, fact);
  }
  return kExitOk;
}

int run_verify(const CommonArgs& args) {
  const Weight lambda = Weight::parse(args.lambda_csv);
  const auto report = verify_identity(lambda, args.m, args.n, args.trials, args.seed,
                                      args.parallel ? Execution::parallel : Execution::serial,
                                      args.height, max_retries_from_env());
  if (args.json_out) {
    std::cout << to_json(report).dump() << "\n";
  } else {
    std::cout << "lambda = (" << lambda.str() << "), m = " << args.m << ", n = " << args.n
              << ", seed = " << args.seed << "\n";
    print_factorization(std::cout, lambda, args.n, report.factorization);
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
      const auto& trial = report.trials[i];
      std::cout << "  trial " << i << ": t = (";
      for (std::size_t j = 0; j < trial.t.size(); ++j) {
        std::cout << (j ? "," : "") << rational_str(trial.t[j]);
      }
      std::cout << ")  lhs = " << value_str(trial.lhs) << "  rhs = " << value_str(trial.rhs)
                << "  " << (trial.ok ? "ok" : "MISMATCH") << "\n";
    }
    std::cout << (report.all_ok ? "verified" : "counterexample found") << "\n";
  }
  return report.all_ok ? kExitOk : kExitCounterexample;
}

int run_kostant_scan(const CommonArgs& args) {
  const auto report = kostant_scan(args.n, args.trials, 0, 2 * args.n, args.seed,
                                   args.parallel ? Execution::parallel : Execution::serial,
                                   max_retries_from_env());
  if (args.json_out) {
    std::cout << to_json(report).dump() << "\n";
  } else {
    std::cout << "n = " << args.n << ", samples = " << args.trials << ", seed = " << args.seed
              << "\n";
    std::cout << "value -1: " << report.histogram[0] << "\nvalue  0: " << report.histogram[1]
              << "\nvalue +1: " << report.histogram[2] << "\n";
    std::cout << (report.all_ok ? "all values in {-1,0,1} and matching the factorization"
                                : "counterexample found")
              << "\n";
  }
  return report.all_ok ? kExitOk : kExitCounterexample;
}

std::vector<CycloMatrix> random_rational_matrices(long count, long size, long height,
                                                  SeedStream& stream) {
  std::vector<CycloMatrix> out;
  for (long i = 0; i < count; ++i) {
    CycloMatrix x(size, size, 1);
    for (long r = 0; r < size; ++r) {
      for (long c = 0; c < size; ++c) {
        x.set(r, c, CycloNumber(random_rational(height, stream, false), 1));
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

int run_block_det(const CommonArgs& args, const std::string& blocks_json) {
  std::vector<CycloMatrix> xs;
  if (!blocks_json.empty()) {
    for (const auto& j : json::parse(blocks_json)) xs.push_back(matrix_from_json(j));
  } else {
    SeedStream stream(args.seed);
    xs = random_rational_matrices(args.n, args.m, args.height, stream);
  }
  const auto result = block_det_identity_check(xs);
  if (args.json_out) {
    std::cout << to_json(result).dump() << "\n";
  } else {
    std::cout << "lhs = " << value_str(result.lhs) << "\nrhs = " << value_str(result.rhs)
              << "\nc   = " << value_str(result.c) << "\n"
              << (result.ok ? "identity holds" : "MISMATCH") << "\n";
  }
  return result.ok ? kExitOk : kExitCounterexample;
}

int run_norm(const CommonArgs& args, const std::string& tuple_json) {
  std::vector<CycloMatrix> gs;
  if (!tuple_json.empty()) {
    for (const auto& j : json::parse(tuple_json)) gs.push_back(matrix_from_json(j));
  } else {
    SeedStream stream(args.seed);
    while (gs.size() < static_cast<std::size_t>(args.n)) {
      auto candidate = random_rational_matrices(1, args.m, args.height, stream).front();
      if (!det_exact(candidate).is_zero()) gs.push_back(std::move(candidate));
    }
  }
  const MatrixTuple tuple(std::move(gs));
  const CycloMatrix nm = norm_map(tuple);
  const auto cp = char_poly(nm);

  // conjugation probe: the char-poly of the norm must not move
  SeedStream stream(args.seed + 1);
  std::vector<CycloMatrix> hs;
  while (hs.size() < static_cast<std::size_t>(tuple.count())) {
    auto candidate =
        random_rational_matrices(1, tuple.block_size(), args.height, stream).front();
    if (!det_exact(candidate).is_zero()) hs.push_back(std::move(candidate));
  }
  const auto cp2 = char_poly(norm_map(twisted_conjugate(tuple, MatrixTuple(std::move(hs)))));
  bool invariant = cp.size() == cp2.size();
  for (std::size_t i = 0; invariant && i < cp.size(); ++i) invariant = (cp[i] == cp2[i]);

  if (args.json_out) {
    json jpoly = json::array();
    for (const auto& c : cp) jpoly.push_back(to_json(c));
    json jgs = json::array();
    for (const auto& g : tuple.gs) jgs.push_back(to_json(g));
    std::cout << json{{"gs", std::move(jgs)},
                      {"norm", to_json(nm)},
                      {"charpoly", std::move(jpoly)},
                      {"conjugation_invariant", invariant}}
                     .dump()
              << "\n";
  } else {
    std::cout << "norm = " << to_json(nm).dump() << "\n";
    std::cout << "char poly coefficients (low to high): ";
    for (std::size_t i = 0; i < cp.size(); ++i) std::cout << (i ? ", " : "") << value_str(cp[i]);
    std::cout << "\nchar poly invariant under a random twisted conjugation: "
              << (invariant ? "yes" : "NO") << "\n";
  }
  return invariant ? kExitOk : kExitCounterexample;
}

int run_sym_lambda(const CommonArgs& args) {
  const std::vector<Rational> t = parse_tuple(args.t_csv);
  const SymKind kind = args.kind == "ext" ? SymKind::ext : SymKind::sym;
  const auto result =
      sym_lambda_check(kind, args.k, static_cast<long>(t.size()), args.n, t);
  if (args.json_out) {
    std::cout << to_json(result).dump() << "\n";
  } else {
    std::cout << value_str(result.lhs) << "\n";
    if (!result.ok) {
      std::cout << "MISMATCH against the closed form " << value_str(result.rhs) << "\n";
    }
  }
  return result.ok ? kExitOk : kExitCounterexample;
}

int run_siegel(const CommonArgs& args) {
  const std::vector<Rational> t = parse_tuple(args.t_csv);
  const auto result = siegel_levi_check(static_cast<long>(t.size()), args.k, t);
  if (args.json_out) {
    std::cout << to_json(result).dump() << "\n";
  } else {
    std::cout << value_str(result.lhs) << "\n";
    if (!result.ok) {
      std::cout << "MISMATCH against the closed form " << value_str(result.rhs) << "\n";
    }
  }
  return result.ok ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact characters of GL_{mn} at twisted Coxeter elements"};
  app.require_subcommand(1);
  CommonArgs args;
  std::string blocks_json;
  std::string tuple_json;

  auto* character = app.add_subcommand("character", "evaluate Theta_lambda(t * c_n)");
  character->add_option("--lambda", args.lambda_csv, "highest weight, e.g. 1,1,0,0")->required();
  character->add_option("--t", args.t_csv, "twist coordinates, rationals p/q")->required();
  character->add_option("--n", args.n, "twist order")->required();
  character->add_flag("--json", args.json_out, "JSON output");

  auto* factor = app.add_subcommand("factor", "residue criterion, factor weights mu_i and sign");
  factor->add_option("--lambda", args.lambda_csv)->required();
  factor->add_option("--m", args.m)->required();
  factor->add_option("--n", args.n)->required();
  factor->add_flag("--json", args.json_out);

  auto* verify = app.add_subcommand("verify", "check the factorization at random rational points");
  verify->add_option("--lambda", args.lambda_csv)->required();
  verify->add_option("--m", args.m)->required();
  verify->add_option("--n", args.n)->required();
  verify->add_option("--trials", args.trials);
  verify->add_option("--seed", args.seed);
  verify->add_option("--height", args.height);
  verify->add_flag("--parallel", args.parallel);
  verify->add_flag("--json", args.json_out);

  auto* kscan = app.add_subcommand("kostant-scan", "character values at the Coxeter point, m = 1");
  kscan->add_option("--n", args.n)->required();
  kscan->add_option("--samples", args.trials);
  kscan->add_option("--seed", args.seed);
  kscan->add_flag("--parallel", args.parallel);
  kscan->add_flag("--json", args.json_out);

  auto* blockdet = app.add_subcommand("block-det", "omega-scaled block determinant identity");
  blockdet->add_option("--m", args.m, "block size (random mode)");
  blockdet->add_option("--n", args.n, "number of blocks (random mode)");
  blockdet->add_option("--seed", args.seed);
  blockdet->add_option("--x", blocks_json, "JSON list of rational matrices");
  blockdet->add_flag("--json", args.json_out);

  auto* norm = app.add_subcommand("norm", "norm map of a matrix tuple and its char poly");
  norm->add_option("--m", args.m, "matrix size (random mode)");
  norm->add_option("--n", args.n, "tuple length (random mode)");
  norm->add_option("--seed", args.seed);
  norm->add_option("--g", tuple_json, "JSON list of rational matrices");
  norm->add_flag("--json", args.json_out);

  auto* symlambda = app.add_subcommand("sym-lambda", "Sym^k / Lambda^k closed forms, order-2 twist");
  symlambda->add_option("--kind", args.kind)->check(CLI::IsMember({"sym", "ext"}));
  symlambda->add_option("--k", args.k)->required();
  symlambda->add_option("--t", args.t_csv)->required();
  symlambda->add_flag("--json", args.json_out);

  auto* siegel = app.add_subcommand("siegel", "Sym^k at (t, 1/t, -t, -1/t) eigenvalue lists");
  siegel->add_option("--k", args.k)->required();
  siegel->add_option("--t", args.t_csv)->required();
  siegel->add_flag("--json", args.json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(character)) return run_character(args);
    if (app.got_subcommand(factor)) return run_factor(args);
    if (app.got_subcommand(verify)) return run_verify(args);
    if (app.got_subcommand(kscan)) {
      args.trials = kscan->count("--samples") ? args.trials : 100;
      return run_kostant_scan(args);
    }
    if (app.got_subcommand(blockdet)) {
      if (blocks_json.empty() && (args.m < 1 || args.n < 1)) {
        throw CLI::ValidationError("block-det needs --x or positive --m/--n");
      }
      return run_block_det(args, blocks_json);
    }
    if (app.got_subcommand(norm)) {
      if (tuple_json.empty() && (args.m < 1 || args.n < 1)) {
        throw CLI::ValidationError("norm needs --g or positive --m/--n");
      }
      return run_norm(args, tuple_json);
    }
    if (app.got_subcommand(symlambda)) return run_sym_lambda(args);
    if (app.got_subcommand(siegel)) return run_siegel(args);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCounterexample;
  }
  return kExitUsage;
}
