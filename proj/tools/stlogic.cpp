// Command-line front end: evaluate formulas in models, decide or refute
// consequence claims, run the canonical fixture suite and the random
// property batteries.
//
// Exit codes: 0 holds/pass, 1 fails/countermodel found, 2 inconclusive
// (no countermodel within the bound when one was asked for), 3 usage,
// parse or validation error.
#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "stlogic/batteries.hpp"
#include "stlogic/consequence.hpp"
#include "stlogic/model.hpp"
#include "stlogic/parse.hpp"
#include "stlogic/semantics.hpp"
#include "stlogic/suite.hpp"

namespace {

using namespace stlogic;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

struct CheckArgs {
  std::string payload;
  std::string logic = "classical";
  std::string mode = "st";
  int max_worlds = 3;
  int extra_atoms = 0;
  std::string cert_out;
};

ModelKind parse_logic(const std::string& s) {
  const auto kind = model_kind_from_string(s);
  if (!kind) throw std::invalid_argument("unknown logic '" + s + "'");
  return *kind;
}

QueryMode parse_mode(const std::string& s) {
  if (s == "tarskian") return QueryMode::Tarskian;
  if (s == "st") return QueryMode::Inference;
  if (s == "meta") return QueryMode::Metainference;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

Query build_query(const CheckArgs& args) {
  Query q;
  q.logic = parse_logic(args.logic);
  q.mode = parse_mode(args.mode);
  q.bound = Bound{args.max_worlds, args.extra_atoms};
  if (q.mode == QueryMode::Metainference)
    q.payload = parse_metainference(args.payload);
  else
    q.payload = parse_inference(args.payload);
  return q;
}

void emit_certificate(const Interpretation& cert, const std::string& cert_out) {
  if (cert_out.empty()) {
    std::cout << save_model(cert);
    return;
  }
  std::ofstream out(cert_out);
  if (!out) throw std::runtime_error("cannot write " + cert_out);
  out << save_model(cert);
}

void print_verdict_line(const std::string& payload, const CheckArgs& args, const Verdict& v) {
  std::cout << payload << " | logic=" << args.logic << " mode=" << args.mode
            << " | " << v.describe();
  if (v.failed()) std::cout << " | cert=" << (args.cert_out.empty() ? "inline" : args.cert_out);
  std::cout << "\n";
}

int run_check(const CheckArgs& args, bool refutation_wanted) {
  const Query query = build_query(args);
  const Verdict verdict = check(query);
  print_verdict_line(args.payload, args, verdict);

  // Multi-succedent strict-tolerant sequents are also checked in reduced
  // form; the two runs must agree, so a mismatch is an internal error.
  if (query.mode == QueryMode::Inference) {
    const Inference& inf = inference_payload(query);
    if (inf.succedent.size() > 1) {
      Query reduced = query;
      reduced.payload = reduce_succedent(inf);
      const Verdict again = check(reduced);
      print_verdict_line(reduce_succedent(inf).to_string() + " (reduced)", args, again);
      if (again.outcome != verdict.outcome) {
        std::cerr << "internal error: reduced-succedent verdict disagrees\n";
        return kExitError;
      }
    }
  }

  if (verdict.failed()) {
    emit_certificate(*verdict.certificate, args.cert_out);
    return kExitFails;
  }
  if (verdict.outcome == Verdict::Outcome::HoldsUpToBound && refutation_wanted)
    return kExitInconclusive;
  return kExitHolds;
}

int run_eval(const std::string& model_path, const std::string& formula_text) {
  std::ifstream in(model_path);
  if (!in) throw std::runtime_error("cannot open " + model_path);
  const Interpretation m = load_model(in);
  const Formula f = parse_formula(formula_text);
  std::cout << "formula: " << f.to_string() << "\n";
  for (int w = 0; w < m.world_count(); ++w)
    std::cout << m.world_name(w) << " = " << eval(m, w, f) << "\n";
  std::cout << "true: " << (is_true(m, f) ? "yes" : "no") << "\n";
  std::cout << "false: " << (is_false(m, f) ? "yes" : "no") << "\n";
  return kExitHolds;
}

int run_suite_command(const std::string& fixtures, std::uint64_t seed, bool weaken_implication,
                      bool pin_bottom) {
  SuiteOptions opts;
  opts.fixtures_dir = fixtures;
  opts.seed = seed;
  if (weaken_implication) opts.check.eval.implication = ImplicationRule::SufficientOnly;
  opts.check.pin_bottom_false_in_minimal = pin_bottom;
  const SuiteResult result = run_suite(opts);
  std::cout << result.to_text();
  return result.all_passed() ? kExitHolds : kExitFails;
}

int run_random_test(const std::string& property, int trials, std::uint64_t seed, int max_worlds) {
  BatteryReport report;
  if (property == "glivenko") {
    report = glivenko_battery(seed, trials, {max_worlds, 0});
  } else if (property == "classical-collapse") {
    report = classical_collapse_battery(seed, trials, {max_worlds, 0});
  } else if (property == "reduction") {
    report = reduction_battery(seed, trials);
  } else if (property == "heredity") {
    report = heredity_battery(seed, {}, max_worlds, trials);
  } else {
    throw std::invalid_argument("unknown property '" + property + "'");
  }
  std::cout << "seed " << seed << "\n" << report.summary() << "\n";
  return report.passed() ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kripke-semantics workbench for minimal, intuitionistic and classical "
               "propositional logic with strict-tolerant inference checking"};
  app.require_subcommand(1);

  // eval
  std::string model_path, formula_text;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula at every world of a model");
  eval_cmd->add_option("model", model_path, "model file")->required();
  eval_cmd->add_option("formula", formula_text, "formula text")->required();

  // check / countermodel
  CheckArgs check_args;
  const auto add_check_options = [&check_args](CLI::App* cmd) {
    cmd->add_option("payload", check_args.payload,
                    "sequent 'G1, G2 => D1, D2' or metainference '[ s1 ; s2 ] =>* [ s ]'")
        ->required();
    cmd->add_option("--logic", check_args.logic, "minimal|intuitionistic|classical")
        ->default_val("classical");
    cmd->add_option("--mode", check_args.mode, "tarskian|st|meta")->default_val("st");
    cmd->add_option("--max-worlds", check_args.max_worlds, "search bound on worlds")
        ->default_val(3);
    cmd->add_option("--extra-atoms", check_args.extra_atoms,
                    "fresh atoms added to the search signature")
        ->default_val(0);
    cmd->add_option("--cert-out", check_args.cert_out, "write the countermodel to this file");
  };
  CLI::App* check_cmd = app.add_subcommand("check", "decide or refute a consequence claim");
  add_check_options(check_cmd);
  CLI::App* counter_cmd =
      app.add_subcommand("countermodel", "search for a countermodel (exit 2 if none in bound)");
  add_check_options(counter_cmd);

  // suite
  std::string fixtures = "fixtures";
  std::uint64_t seed = 1;
  bool weaken_implication = false;
  bool pin_bottom = false;
  CLI::App* suite_cmd =
      app.add_subcommand("suite", "run the canonical fixtures and property batteries");
  suite_cmd->add_option("--fixtures", fixtures, "fixture directory")->default_val("fixtures");
  suite_cmd->add_option("--seed", seed, "seed for the random batteries")->default_val(1);
  suite_cmd->add_flag("--weaken-implication", weaken_implication,
                      "diagnostic: sufficient-only implication clause (suite must fail)");
  suite_cmd->add_flag("--pin-bottom", pin_bottom,
                      "diagnostic: force bot false in generated minimal models (suite must fail)");

  // random-test
  std::string property;
  int trials = 100;
  std::uint64_t rt_seed = 1;
  int rt_max_worlds = 3;
  CLI::App* random_cmd = app.add_subcommand("random-test", "run one property battery");
  random_cmd->add_option("--property", property, "glivenko|classical-collapse|reduction|heredity")
      ->required();
  random_cmd->add_option("--trials", trials, "number of sampled cases")->default_val(100);
  random_cmd->add_option("--seed", rt_seed, "sampler seed")->default_val(1);
  random_cmd->add_option("--max-worlds", rt_max_worlds, "search bound on worlds")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitHolds : kExitError;
  }
  if (trials < 1) {
    std::cerr << "error: --trials must be at least 1\n";
    return kExitError;
  }

  try {
    if (*eval_cmd) return run_eval(model_path, formula_text);
    if (*check_cmd) return run_check(check_args, false);
    if (*counter_cmd) return run_check(check_args, true);
    if (*suite_cmd) return run_suite_command(fixtures, seed, weaken_implication, pin_bottom);
    return run_random_test(property, trials, rt_seed, rt_max_worlds);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
