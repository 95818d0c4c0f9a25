#include "coxchar/json_io.hpp"

#include <stdexcept>

namespace coxchar {

json to_json(const Rational& value) { return rational_str(value); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a JSON string");
  return parse_rational(j.get<std::string>());
}

json to_json(const CycloNumber& value) {
  json coeffs = json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(rational_str(c));
  return json{{"conductor", value.conductor()}, {"coeffs", std::move(coeffs)}};
}

CycloNumber cyclo_from_json(const json& j) {
  const long conductor = j.at("conductor").get<long>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return CycloNumber::from_coeffs(conductor, std::move(coeffs));
}

json to_json(const Weight& w) {
  json out = json::array();
  for (long long v : w.entries()) out.push_back(v);
  return out;
}

Weight weight_from_json(const json& j) {
  std::vector<long long> entries;
  for (const auto& v : j) entries.push_back(v.get<long long>());
  return Weight(std::move(entries));
}

json to_json(const ResidueClasses& classes) {
  json out = json::array();
  for (const auto& cls : classes.classes) {
    json row = json::array();
    for (long long v : cls) row.push_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const FactorizationResult& fact) {
  json out{{"vanishes", fact.vanishes}, {"classes", to_json(fact.classes)}};
  json mus = json::array();
  for (const auto& mu : fact.mus) mus.push_back(to_json(mu));
  out["mus"] = std::move(mus);
  if (fact.sign) out["sign"] = *fact.sign;
  return out;
}

json to_json(const VerificationReport& report) {
  json out = to_json(report.factorization);
  json trials = json::array();
  for (const auto& trial : report.trials) {
    json t = json::array();
    for (const auto& v : trial.t) t.push_back(rational_str(v));
    trials.push_back(json{{"t", std::move(t)},
                          {"lhs", to_json(trial.lhs)},
                          {"rhs", to_json(trial.rhs)},
                          {"ok", trial.ok}});
  }
  out["trials"] = std::move(trials);
  return out;
}

json to_json(const CycloMatrix& m) {
  json rows = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols(); ++c) {
      const CycloNumber& v = m.at(r, c);
      if (v.is_rational()) {
        row.push_back(rational_str(v.to_rational()));
      } else {
        row.push_back(to_json(v));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CycloMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    rows.push_back(std::move(r));
  }
  return CycloMatrix::from_rational_rows(rows);
}

json to_json(const BlockDetResult& r) {
  return json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"c", to_json(r.c)}, {"ok", r.ok}};
}

json to_json(const CheckResult& r) {
  return json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"ok", r.ok}};
}

json to_json(const TrialConfig& config) {
  json shapes = json::array();
  for (const auto& s : config.shapes) shapes.push_back(json{{"m", s.m}, {"n", s.n}});
  return json{{"seed", config.seed},           {"trials", config.trials},
              {"shapes", std::move(shapes)},   {"weights_per_shape", config.weights_per_shape},
              {"entry_lo", config.entry_lo},   {"entry_hi", config.entry_hi},
              {"height", config.height}};
}

TrialConfig trial_config_from_json(const json& j) {
  TrialConfig config;
  config.seed = j.value("seed", config.seed);
  config.trials = j.value("trials", config.trials);
  config.weights_per_shape = j.value("weights_per_shape", config.weights_per_shape);
  config.entry_lo = j.value("entry_lo", config.entry_lo);
  config.entry_hi = j.value("entry_hi", config.entry_hi);
  config.height = j.value("height", config.height);
  if (j.contains("shapes")) {
    for (const auto& s : j.at("shapes")) {
      config.shapes.push_back(SweepShape{s.at("m").get<long>(), s.at("n").get<long>()});
    }
  }
  if (config.shapes.empty()) throw std::invalid_argument("trial config needs a nonempty shape list");
  if (config.entry_lo > config.entry_hi || config.height < 1 || config.trials < 1 ||
      config.weights_per_shape < 1) {
    throw std::invalid_argument("trial config bounds must be positive and ordered");
  }
  return config;
}

json to_json(const SweepReport& report) {
  json items = json::array();
  for (const auto& item : report.items) {
    json entry = to_json(item.report);
    entry["lambda"] = to_json(item.report.lambda);
    entry["m"] = item.shape.m;
    entry["n"] = item.shape.n;
    items.push_back(std::move(entry));
  }
  return json{{"config", to_json(report.config)},
              {"items", std::move(items)},
              {"vanishing", report.vanishing},
              {"factoring", report.factoring},
              {"all_ok", report.all_ok}};
}

json to_json(const KostantReport& report) {
  json samples = json::array();
  for (const auto& s : report.samples) {
    samples.push_back(json{{"lambda", to_json(s.lambda)},
                           {"value", s.value},
                           {"predicted", s.predicted},
                           {"ok", s.ok}});
  }
  return json{{"n", report.n},
              {"seed", report.seed},
              {"samples", std::move(samples)},
              {"minus_one", report.histogram[0]},
              {"zero", report.histogram[1]},
              {"plus_one", report.histogram[2]},
              {"all_ok", report.all_ok}};
}

}  // namespace coxchar
