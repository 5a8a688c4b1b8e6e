#include "cfkit/cli.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cfkit/cfn.hpp"
#include "cfkit/distance.hpp"
#include "cfkit/error.hpp"
#include "cfkit/pain_eval.hpp"
#include "cfkit/perturbation.hpp"
#include "cfkit/score.hpp"
#include "cfkit/text_io.hpp"

namespace cfkit::cli {
namespace {

using nlohmann::json;

// Pain-evaluation case study: questionnaire total 29, face similarities
// 0.4 (scale 0) and 0.7 (scale 10).
const std::vector<int> kCaseStudyItems{4, 5, 4, 5, 4, 4, 3};
constexpr double kCaseStudyU = 0.4;
constexpr double kCaseStudyV = 0.7;

std::vector<Order> orders_1_to(int n) {
  std::vector<Order> out;
  for (int p = 1; p <= n; ++p) out.emplace_back(p);
  return out;
}

std::vector<Order> parse_orders(const std::vector<std::string>& texts, std::vector<Order> fallback) {
  if (texts.empty()) return fallback;
  std::vector<Order> out;
  for (const auto& t : texts) out.push_back(Order::parse(t));
  return out;
}

Order single_order(const RunConfig& c, int fallback) {
  const auto orders = parse_orders(c.p_values, {Order{fallback}});
  if (orders.size() != 1) throw Error(ErrorCode::UsageError, "expected exactly one --p");
  return orders.front();
}

double single_lambda(const RunConfig& c, double fallback) {
  if (c.lambda_values.empty()) return fallback;
  if (c.lambda_values.size() != 1) throw Error(ErrorCode::UsageError, "expected exactly one --lambda");
  return c.lambda_values.front();
}

void write_to(const std::optional<std::filesystem::path>& path, std::ostream& fallback,
              const std::function<void(std::ostream&)>& body) {
  if (!path) {
    body(fallback);
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoError, "cannot open '" + path->string() + "' for writing");
  body(file);
  file.flush();
  if (!file) throw Error(ErrorCode::IoError, "failed writing '" + path->string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

// --- CSV writers ------------------------------------------------------------

void write_simulation_csv(const PerturbationStudy& study, std::ostream& os) {
  os << "trial,epsilon,p,lambda,d_m,d_h,d_c,delta_d_m,delta_d_h,delta_d_c\n";
  for (const auto& t : study.trials) {
    for (const auto& c : t.cells) {
      os << t.trial << ',' << format_real(t.epsilon) << ',' << c.p.to_string() << ',' << format_real(c.lambda)
         << ',' << format_real(c.d_m) << ',' << format_real(c.d_h) << ',' << format_real(c.d_c) << ','
         << format_real(c.delta_d_m) << ',' << format_real(c.delta_d_h) << ',' << format_real(c.delta_d_c)
         << '\n';
    }
  }
}

void write_trend_csv(const Cfn& a, const Cfn& b, const std::vector<Order>& orders,
                     const std::vector<double>& grid, std::ostream& os) {
  os << "p,lambda,d_m,d_h,d_c\n";
  for (Order p : orders) {
    for (const auto& r : lambda_trend(a, b, p, grid)) {
      os << p.to_string() << ',' << format_real(r.lambda) << ',' << format_real(r.d_m) << ','
         << format_real(r.d_h) << ',' << format_real(r.d_c) << '\n';
    }
  }
}

void write_score_grid_csv(const std::vector<Cfn>& cfns, const std::vector<Order>& orders,
                          const std::vector<double>& grid, std::ostream& os) {
  os << "lambda,p";
  if (cfns.size() == 1) {
    os << ",s";
  } else {
    for (std::size_t i = 0; i < cfns.size(); ++i) os << ",s" << i + 1;
  }
  os << '\n';
  for (double lambda : grid) {
    for (Order p : orders) {
      const DistanceParams params{p, lambda};
      os << format_real(lambda) << ',' << p.to_string();
      for (const auto& f : cfns) os << ',' << format_real(score(f, params).s);
      os << '\n';
    }
  }
}

void write_pain_sweep_csv(const std::vector<pain::SweepRow>& rows, std::ostream& os) {
  os << "mode,p,lambda,j_opt,s_opt,gap\n";
  for (const auto& r : rows) {
    os << r.mode << ',' << r.p.to_string() << ',' << (std::isnan(r.lambda) ? "" : format_real(r.lambda)) << ','
       << format_real(r.j_opt) << ',' << format_real(r.s_opt) << ',' << format_real(r.gap) << '\n';
  }
}

// --- subcommands ------------------------------------------------------------

double measure_distance(const std::string& measure, const Cfn& a, const Cfn& b, const DistanceParams& params) {
  if (measure == "legacy") return legacy_minkowski(a, b, params.p());
  if (measure == "im") return cf_im(a, b, params.p());
  if (measure == "h") return cf_h(a, b);
  if (measure == "c") return cf_c(a, b, params);
  throw Error(ErrorCode::UsageError, "unknown measure '" + measure + "' (legacy, im, h, c)");
}

std::vector<std::pair<Cfn, Cfn>> read_pair_batch(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::vector<std::pair<Cfn, Cfn>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) fields.push_back(cell);
    if (fields.size() != 6) {
      throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(line_no) +
                                             ": expected 6 columns u1,v1,j1,u2,v2,j2");
    }
    std::vector<double> x;
    try {
      for (const auto& f : fields) x.push_back(parse_real(f));
    } catch (const Error&) {
      if (line_no == 1) continue;  // header
      throw;
    }
    pairs.emplace_back(Cfn::make(x[0], x[1], x[2]), Cfn::make(x[3], x[4], x[5]));
  }
  return pairs;
}

void run_distance(const RunConfig& c, std::ostream& out) {
  const DistanceParams params{single_order(c, 1), single_lambda(c, 0.5)};
  std::vector<std::pair<Cfn, Cfn>> pairs;
  if (c.batch) {
    if (!c.cfns.empty()) throw Error(ErrorCode::UsageError, "give either --batch or two CFNs, not both");
    pairs = read_pair_batch(*c.batch);
  } else {
    if (c.cfns.size() != 2) throw Error(ErrorCode::UsageError, "distance needs exactly two CFNs");
    pairs.emplace_back(parse_cfn(c.cfns[0]), parse_cfn(c.cfns[1]));
  }
  std::vector<double> values;
  for (const auto& [a, b] : pairs) values.push_back(measure_distance(c.measure, a, b, params));

  write_to(c.out, out, [&](std::ostream& os) {
    switch (c.format) {
      case OutputFormat::Plain:
        for (double v : values) os << format_fixed6(v) << '\n';
        break;
      case OutputFormat::Csv:
        os << "f1,f2,measure,p,lambda,value\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
          os << '"' << format_cfn(pairs[i].first) << "\",\"" << format_cfn(pairs[i].second) << "\"," << c.measure
             << ',' << params.p().to_string() << ',' << format_real(params.lambda()) << ','
             << format_real(values[i]) << '\n';
        }
        break;
      case OutputFormat::Json: {
        json rows = json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
          rows.push_back({{"f1", format_cfn(pairs[i].first)},
                          {"f2", format_cfn(pairs[i].second)},
                          {"measure", c.measure},
                          {"p", params.p().to_string()},
                          {"lambda", params.lambda()},
                          {"value", values[i]}});
        }
        os << (rows.size() == 1 ? rows.front() : rows).dump() << '\n';
        break;
      }
    }
  });
}

void run_score(const RunConfig& c, std::ostream& out) {
  if (c.cfns.empty()) throw Error(ErrorCode::UsageError, "score needs at least one CFN");
  std::vector<Cfn> cfns;
  for (const auto& text : c.cfns) cfns.push_back(parse_cfn(text));

  if (c.sweep) {
    const auto orders = parse_orders(c.p_values, orders_1_to(10));
    const auto grid = c.lambda_values.empty() ? uniform_grid(100) : c.lambda_values;
    for (double lambda : grid) DistanceParams(Order{1}, lambda);
    write_to(c.out, out, [&](std::ostream& os) { write_score_grid_csv(cfns, orders, grid, os); });
    return;
  }

  const DistanceParams params{single_order(c, 2), single_lambda(c, 0.5)};
  std::vector<ScoreResult> results;
  for (const auto& f : cfns) results.push_back(score(f, params));

  write_to(c.out, out, [&](std::ostream& os) {
    switch (c.format) {
      case OutputFormat::Plain:
        for (const auto& r : results) {
          os << "s=" << format_fixed6(r.s) << " d_to_worst=" << format_fixed6(r.d_to_worst)
             << " d_to_best=" << format_fixed6(r.d_to_best) << '\n';
        }
        if (cfns.size() == 2) os << "compare=" << to_string(compare(cfns[0], cfns[1], params)) << '\n';
        break;
      case OutputFormat::Csv:
        os << "f,p,lambda,s,d_to_worst,d_to_best\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
          os << '"' << format_cfn(cfns[i]) << "\"," << params.p().to_string() << ','
             << format_real(params.lambda()) << ',' << format_real(results[i].s) << ','
             << format_real(results[i].d_to_worst) << ',' << format_real(results[i].d_to_best) << '\n';
        }
        break;
      case OutputFormat::Json: {
        json rows = json::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
          rows.push_back({{"f", format_cfn(cfns[i])},
                          {"p", params.p().to_string()},
                          {"lambda", params.lambda()},
                          {"s", results[i].s},
                          {"d_to_worst", results[i].d_to_worst},
                          {"d_to_best", results[i].d_to_best}});
        }
        json doc = rows.size() == 1 ? rows.front() : json{{"scores", rows}};
        if (cfns.size() == 2) doc["compare"] = to_string(compare(cfns[0], cfns[1], params));
        os << doc.dump() << '\n';
        break;
      }
    }
  });
}

PerturbationConfig simulation_config(const RunConfig& c) {
  PerturbationConfig cfg;
  if (!c.cfns.empty()) {
    if (c.cfns.size() != 2) throw Error(ErrorCode::UsageError, "--pair takes exactly two CFNs");
    cfg.first = parse_cfn(c.cfns[0]);
    cfg.second = parse_cfn(c.cfns[1]);
  }
  cfg.trials = c.trials;
  cfg.seed = c.seed;
  cfg.p_values = parse_orders(c.p_values, cfg.p_values);
  if (!c.lambda_values.empty()) cfg.lambda_values = c.lambda_values;
  cfg.validate();
  return cfg;
}

void run_simulate(const RunConfig& c, std::ostream& out) {
  const PerturbationStudy study = run_study(simulation_config(c));
  if (!c.out) {
    write_simulation_csv(study, out);
    return;
  }
  write_to(c.out, out, [&](std::ostream& os) { write_simulation_csv(study, os); });
  json summary = json::array();
  for (const auto& s : study.summary) {
    summary.push_back({{"p", s.p.to_string()},
                       {"lambda", s.lambda},
                       {"mean_delta_d_m", s.mean_delta_d_m},
                       {"mean_delta_d_h", s.mean_delta_d_h},
                       {"mean_delta_d_c", s.mean_delta_d_c},
                       {"max_delta_d_m", s.max_delta_d_m},
                       {"max_delta_d_h", s.max_delta_d_h},
                       {"max_delta_d_c", s.max_delta_d_c},
                       {"count_m_ge_h", s.count_m_ge_h},
                       {"count_m_ge_c_ge_h", s.count_m_ge_c_ge_h}});
  }
  out << json{{"trials", study.config.trials}, {"seed", study.config.seed}, {"summary", summary}}.dump(2)
      << '\n';
}

struct PainInput {
  double u = kCaseStudyU;
  double v = kCaseStudyV;
  double patient_pain = pain::normalize_patient_score(kCaseStudyItems);
  std::vector<int> items = kCaseStudyItems;
  std::optional<Order> p;
  std::optional<double> lambda;
};

PainInput read_pain_input(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  PainInput in;
  try {
    pain::PainAssessment a;
    a.patient_items = doc.at("patient_items").get<std::vector<int>>();
    a.sim_to_scale0 = doc.at("sim_scale0").get<double>();
    a.sim_to_scale10 = doc.at("sim_scale10").get<double>();
    a.validate();
    in.items = a.patient_items;
    in.u = a.sim_to_scale0;
    in.v = a.sim_to_scale10;
    in.patient_pain = pain::normalize_patient_score(a.patient_items);
    if (doc.contains("p")) {
      const auto& p = doc["p"];
      in.p = p.is_string() ? Order::parse(p.get<std::string>()) : Order{p.get<int>()};
    }
    if (doc.contains("lambda")) in.lambda = doc["lambda"].get<double>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return in;
}

void run_pain_eval(const RunConfig& c, std::ostream& out) {
  const PainInput in = c.input ? read_pain_input(*c.input) : PainInput{};

  if (c.sweep || c.legacy_sweep) {
    std::vector<pain::SweepRow> rows;
    const auto orders = parse_orders(c.p_values, orders_1_to(10));
    if (c.sweep) {
      const auto grid = c.lambda_values.empty() ? uniform_grid(20) : c.lambda_values;
      rows = pain::sensitivity_sweep(in.u, in.v, in.patient_pain, orders, grid);
    }
    if (c.legacy_sweep) {
      const auto legacy = pain::legacy_comparison_sweep(in.u, in.v, in.patient_pain, orders);
      rows.insert(rows.end(), legacy.begin(), legacy.end());
    }
    write_to(c.out, out, [&](std::ostream& os) { write_pain_sweep_csv(rows, os); });
    return;
  }

  const Order p = c.p_values.empty() ? in.p.value_or(Order{2}) : single_order(c, 2);
  const double lambda = c.lambda_values.empty() ? in.lambda.value_or(0.5) : single_lambda(c, 0.5);
  const DistanceParams params{p, lambda};
  const double threshold = c.threshold.value_or(pain::kDefaultConfusionThreshold);

  const pain::PainSolution sol = pain::solve_programming1(in.u, in.v, in.patient_pain, params);
  const pain::Interpretation verdict = pain::interpret(sol, threshold);

  const json doc{{"patient_items", in.items},
                 {"sim_scale0", in.u},
                 {"sim_scale10", in.v},
                 {"p", p.to_string()},
                 {"lambda", lambda},
                 {"threshold", threshold},
                 {"cfn", to_json(Cfn::make(in.u, in.v, sol.j_opt))},
                 {"j_lo", sol.j_lo},
                 {"j_hi", sol.j_hi},
                 {"j_opt", sol.j_opt},
                 {"s_opt", sol.s_opt},
                 {"nurse_pain", sol.nurse_pain},
                 {"patient_pain", sol.patient_pain},
                 {"gap", sol.gap},
                 {"objective", sol.objective},
                 {"confusion_ratio", sol.confusion_ratio},
                 {"recommendation", pain::to_string(verdict.recommendation)},
                 {"final_pain_score", verdict.final_pain_score}};
  write_to(c.out, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
}

const Cfn kExampleFirst = Cfn::make(0.8, 0.4, 0.32);
const Cfn kExampleSecond = Cfn::make(0.1, 0.9, 0.09);

void run_sweep(const RunConfig& c, std::ostream& out) {
  const auto& kind = c.sweep_kind;
  write_to(c.out, out, [&](std::ostream& os) {
    if (kind == "trend") {
      write_trend_csv(kExampleFirst, kExampleSecond, parse_orders(c.p_values, orders_1_to(3)),
                      c.lambda_values.empty() ? uniform_grid(100) : c.lambda_values, os);
    } else if (kind == "score") {
      write_score_grid_csv({kExampleFirst, kExampleSecond}, parse_orders(c.p_values, orders_1_to(10)),
                           c.lambda_values.empty() ? uniform_grid(100) : c.lambda_values, os);
    } else if (kind == "pain") {
      const PainInput in;
      write_pain_sweep_csv(pain::sensitivity_sweep(in.u, in.v, in.patient_pain,
                                                   parse_orders(c.p_values, orders_1_to(10)),
                                                   c.lambda_values.empty() ? uniform_grid(20) : c.lambda_values),
                           os);
    } else if (kind == "legacy") {
      const PainInput in;
      write_pain_sweep_csv(
          pain::legacy_comparison_sweep(in.u, in.v, in.patient_pain, parse_orders(c.p_values, orders_1_to(10))),
          os);
    } else {
      throw Error(ErrorCode::UsageError, "unknown sweep kind '" + kind + "' (trend, score, pain, legacy)");
    }
  });
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr) return kDefaultSeed;
  const std::string_view text(env);
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return kDefaultSeed;
  return seed;
}

void export_figure_datasets(const std::filesystem::path& out_dir, std::uint64_t seed) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create '" + out_dir.string() + "': " + ec.message());

  const auto file = [&](const char* name) { return std::optional<std::filesystem::path>(out_dir / name); };
  std::ostringstream unused;

  PerturbationConfig fig2;
  fig2.seed = seed;
  write_to(file("fig2.csv"), unused, [&](std::ostream& os) { write_simulation_csv(run_study(fig2), os); });

  write_to(file("fig3.csv"), unused, [&](std::ostream& os) {
    write_trend_csv(kExampleFirst, kExampleSecond, orders_1_to(3), uniform_grid(100), os);
  });

  PerturbationConfig fig4;
  fig4.seed = seed + 1;
  fig4.lambda_values = {0.0, 0.25, 0.5, 0.75, 1.0};
  write_to(file("fig4.csv"), unused, [&](std::ostream& os) { write_simulation_csv(run_study(fig4), os); });

  write_to(file("fig5.csv"), unused, [&](std::ostream& os) {
    write_score_grid_csv({kExampleFirst, kExampleSecond}, orders_1_to(10), uniform_grid(100), os);
  });

  const PainInput in;
  write_to(file("fig7.csv"), unused, [&](std::ostream& os) {
    write_pain_sweep_csv(pain::sensitivity_sweep(in.u, in.v, in.patient_pain, orders_1_to(10), uniform_grid(20)),
                         os);
  });
  write_to(file("fig8.csv"), unused, [&](std::ostream& os) {
    write_pain_sweep_csv(pain::legacy_comparison_sweep(in.u, in.v, in.patient_pain, orders_1_to(10)), os);
  });
}

void dispatch(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Subcommand::Distance: return run_distance(config, out);
    case Subcommand::Score: return run_score(config, out);
    case Subcommand::Simulate: return run_simulate(config, out);
    case Subcommand::PainEval: return run_pain_eval(config, out);
    case Subcommand::Sweep: return run_sweep(config, out);
    case Subcommand::ExportFigures:
      export_figure_datasets(config.out_dir, config.seed);
      out << "wrote fig2.csv fig3.csv fig4.csv fig5.csv fig7.csv fig8.csv to " << config.out_dir.string() << '\n';
      return;
  }
}

namespace {

void report(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UsageError:
    case ErrorCode::InvalidParams:
    case ErrorCode::ParseError: return kUsage;
    case ErrorCode::IoError: return kIo;
    default: return kDomain;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.seed = default_seed();

  CLI::App app{"Cognitive fuzzy number distances, scores and pain evaluation", "cfkit"};
  app.require_subcommand(1, 1);

  const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::Plain}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* distance = app.add_subcommand("distance", "Distance between two CFNs");
  distance->add_option("--measure", config.measure, "legacy | im | h | c")
      ->check(CLI::IsMember({"legacy", "im", "h", "c"}));
  distance->add_option("--p", config.p_values, "Minkowski order (1..64 or inf)")->allow_extra_args(false);
  distance->add_option("--lambda", config.lambda_values, "Balance parameter in [0, 1]")->allow_extra_args(false);
  distance->add_option("--batch", config.batch, "CSV of rows u1,v1,j1,u2,v2,j2")->check(CLI::ExistingFile);
  distance->add_option("--out", config.out, "Write results here instead of stdout");
  distance->add_option("cfns", config.cfns, "Two CFNs as u,v,j or ⟨u,v,j⟩");
  add_format(distance);

  auto* score_cmd = app.add_subcommand("score", "Combined-distance score of CFNs");
  score_cmd->add_option("--p", config.p_values, "Minkowski order (repeatable with --sweep)")->allow_extra_args(false);
  score_cmd->add_option("--lambda", config.lambda_values, "Balance parameter (repeatable with --sweep)")->allow_extra_args(false);
  score_cmd->add_flag("--sweep", config.sweep, "CSV of (lambda, p, s) over the lambda x p grid");
  score_cmd->add_option("--out", config.out, "Write results here instead of stdout");
  score_cmd->add_option("cfns", config.cfns, "CFNs to score");
  add_format(score_cmd);

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo perturbation study");
  simulate->add_option("--pair", config.cfns, "Perturbed CFN followed by the fixed CFN")->expected(2);
  simulate->add_option("--trials", config.trials, "Number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", config.seed, "Master seed (default $CFKIT_SEED or 2024)");
  simulate->add_option("--p", config.p_values, "Minkowski order (repeatable)")->allow_extra_args(false);
  simulate->add_option("--lambda", config.lambda_values, "Balance parameter (repeatable)")->allow_extra_args(false);
  simulate->add_option("--out", config.out, "CSV destination; summary then goes to stdout");

  auto* pain_cmd = app.add_subcommand("pain-eval", "Pain evaluation from questionnaire and face similarities");
  pain_cmd->add_option("--input", config.input, "Assessment JSON")->check(CLI::ExistingFile);
  pain_cmd->add_option("--threshold", config.threshold, "Confusion-ratio threshold in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  pain_cmd->add_option("--p", config.p_values, "Minkowski order (repeatable with sweeps)")->allow_extra_args(false);
  pain_cmd->add_option("--lambda", config.lambda_values, "Balance parameter (repeatable with --sweep)")->allow_extra_args(false);
  pain_cmd->add_flag("--sweep", config.sweep, "Sensitivity sweep over p and lambda");
  pain_cmd->add_flag("--legacy-sweep", config.legacy_sweep, "Sweep with the legacy Minkowski score");
  pain_cmd->add_option("--out", config.out, "Write results here instead of stdout");

  auto* sweep = app.add_subcommand("sweep", "Single figure dataset with default inputs");
  sweep->add_option("--kind", config.sweep_kind, "trend | score | pain | legacy")
      ->required()
      ->check(CLI::IsMember({"trend", "score", "pain", "legacy"}));
  sweep->add_option("--p", config.p_values, "Minkowski orders (repeatable)")->allow_extra_args(false);
  sweep->add_option("--lambda", config.lambda_values, "Lambda grid (repeatable)")->allow_extra_args(false);
  sweep->add_option("--out", config.out, "Write results here instead of stdout");

  auto* figures = app.add_subcommand("export-figures", "Write every figure dataset as CSV");
  figures->add_option("--out-dir", config.out_dir, "Destination directory");
  figures->add_option("--seed", config.seed, "Master seed (default $CFKIT_SEED or 2024)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, "UsageError", e.what());
    return kUsage;
  }

  if (distance->parsed()) config.command = Subcommand::Distance;
  if (score_cmd->parsed()) config.command = Subcommand::Score;
  if (simulate->parsed()) config.command = Subcommand::Simulate;
  if (pain_cmd->parsed()) config.command = Subcommand::PainEval;
  if (sweep->parsed()) config.command = Subcommand::Sweep;
  if (figures->parsed()) config.command = Subcommand::ExportFigures;

  try {
    dispatch(config, out);
  } catch (const Error& e) {
    report(err, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report(err, "InternalError", e.what());
    return kDomain;
  }
  return kOk;
}

}  // namespace cfkit::cli
