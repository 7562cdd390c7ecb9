// Fixture runner: loads canonical models and expectation files from a
// directory, checks every expectation against the semantics, then runs the
// property batteries.  The report is deterministic for a given seed.
//
// Expectation file lines ('#' comments):
//   eval <world> <formula> = 0|1
//   true <formula> = yes|no
//   false <formula> = yes|no
//   inference <sequent> = holds|fails
//   meta <metainference> = holds|fails
#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stlogic/batteries.hpp"
#include "stlogic/consequence.hpp"
#include "stlogic/model.hpp"
#include "stlogic/parse.hpp"
#include "stlogic/semantics.hpp"

namespace stlogic {

struct Expectation {
  std::string raw;       // payload text without the "= value" tail
  std::string directive;  // eval | true | false | inference | meta
  std::string world;      // eval only
  std::string payload;
  std::string expected;
};

struct Fixture {
  std::string name;
  Interpretation model;
  std::vector<Expectation> expectations;
};

class SuiteError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<Expectation> parse_expectations(std::istream& in, const std::string& where) {
  std::vector<Expectation> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    const auto context = where + ":" + std::to_string(line_no);
    // The separator is the last bare "=" token ("=>" and "=>*" are single
    // tokens of their own).
    auto sep = std::find(tokens.rbegin(), tokens.rend(), "=");
    if (sep == tokens.rend() || sep == tokens.rbegin())
      throw SuiteError(context + ": expected '<payload> = <value>'");
    const std::size_t sep_index = tokens.size() - 1 - (sep - tokens.rbegin());

    Expectation e;
    e.directive = tokens[0];
    e.expected = tokens.back();
    if (tokens.size() - sep_index != 2)
      throw SuiteError(context + ": expected a single value after '='");
    std::size_t payload_begin = 1;
    if (e.directive == "eval") {
      if (sep_index < 3) throw SuiteError(context + ": eval needs '<world> <formula>'");
      e.world = tokens[1];
      payload_begin = 2;
    } else if (e.directive != "true" && e.directive != "false" && e.directive != "inference" &&
               e.directive != "meta") {
      throw SuiteError(context + ": unknown directive '" + e.directive + "'");
    }
    if (sep_index <= payload_begin - 1 || sep_index == payload_begin)
      throw SuiteError(context + ": missing payload");
    for (std::size_t i = payload_begin; i < sep_index; ++i) {
      if (!e.payload.empty()) e.payload += ' ';
      e.payload += tokens[i];
    }
    for (std::size_t i = 0; i < sep_index; ++i) {
      if (!e.raw.empty()) e.raw += ' ';
      e.raw += tokens[i];
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline Fixture load_fixture(const std::filesystem::path& model_file) {
  std::ifstream model_in(model_file);
  if (!model_in) throw SuiteError("cannot open " + model_file.string());
  Interpretation model = load_model(model_in);

  std::filesystem::path expect_file = model_file;
  expect_file.replace_extension(".expect");
  std::ifstream expect_in(expect_file);
  if (!expect_in) throw SuiteError("cannot open " + expect_file.string());

  return Fixture{model_file.stem().string(), std::move(model),
                 parse_expectations(expect_in, expect_file.filename().string())};
}

/// All *.model files in the directory, sorted by name.
inline std::vector<Fixture> load_fixture_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".model") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw SuiteError("no .model files in " + dir.string());
  std::vector<Fixture> out;
  for (const auto& f : files) out.push_back(load_fixture(f));
  return out;
}

/// Checks one expectation; returns an empty string on a match, else a diff.
inline std::string check_expectation(const Interpretation& m, const Expectation& e,
                                     const EvalOptions& opts = {}) {
  std::string actual;
  if (e.directive == "eval") {
    actual = std::to_string(eval(m, e.world, parse_formula(e.payload), opts));
  } else if (e.directive == "true") {
    actual = is_true(m, parse_formula(e.payload), opts) ? "yes" : "no";
  } else if (e.directive == "false") {
    actual = is_false(m, parse_formula(e.payload), opts) ? "yes" : "no";
  } else if (e.directive == "inference") {
    actual = satisfies_inference(m, parse_inference(e.payload), opts) ? "holds" : "fails";
  } else {
    actual = satisfies_metainference(m, parse_metainference(e.payload), opts) ? "holds" : "fails";
  }
  if (actual == e.expected) return {};
  return e.raw + ": expected " + e.expected + ", got " + actual;
}

struct SuiteOptions {
  std::filesystem::path fixtures_dir = "fixtures";
  std::uint64_t seed = 1;
  CheckOptions check{};
};

struct SuiteItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct SuiteResult {
  std::uint64_t seed = 0;
  std::vector<SuiteItem> items;

  bool all_passed() const {
    for (const SuiteItem& item : items)
      if (!item.passed) return false;
    return !items.empty();
  }

  std::string to_text() const {
    std::string out = "seed " + std::to_string(seed) + "\n";
    for (const SuiteItem& item : items) {
      out += (item.passed ? "[PASS] " : "[FAIL] ") + item.name;
      if (!item.detail.empty()) {
        std::istringstream lines(item.detail);
        std::string line;
        while (std::getline(lines, line)) out += "\n       " + line;
      }
      out += "\n";
    }
    return out;
  }
};

inline SuiteResult run_suite(const SuiteOptions& opts = {}) {
  SuiteResult result;
  result.seed = opts.seed;

  std::vector<Fixture> fixtures;
  try {
    fixtures = load_fixture_dir(opts.fixtures_dir);
  } catch (const std::exception& e) {
    result.items.push_back({"fixtures", false, e.what()});
    return result;
  }

  for (const Fixture& fixture : fixtures) {
    SuiteItem item{"fixture " + fixture.name, true, {}};
    int checked = 0;
    for (const Expectation& e : fixture.expectations) {
      std::string diff;
      try {
        diff = check_expectation(fixture.model, e, opts.check.eval);
      } catch (const std::exception& err) {
        diff = e.raw + ": " + err.what();
      }
      ++checked;
      if (!diff.empty()) {
        item.passed = false;
        item.detail += (item.detail.empty() ? "" : "\n") + diff;
      }
    }
    if (item.passed) item.detail = std::to_string(checked) + " expectation(s)";
    result.items.push_back(std::move(item));
  }

  const auto add = [&result](const BatteryReport& report) {
    result.items.push_back({"battery " + report.name, report.passed(), report.summary()});
  };
  add(heredity_battery(opts.seed, opts.check));
  add(reduction_battery(opts.seed, 500, opts.check));
  add(classical_collapse_battery(opts.seed, 200, {3, 0}, opts.check));
  add(glivenko_battery(opts.seed, 100, {4, 0}, opts.check));
  add(minimal_st_failure_battery(opts.seed, 100, {3, 0}, opts.check));
  add(trivial_totality_battery(opts.seed, 100, opts.check));
  add(falsity_collapse_battery(opts.seed, opts.check));
  add(bivalence_battery(opts.seed, 200, opts.check));
  add(empty_premise_meta_battery(opts.seed, 100, opts.check));
  return result;
}

}  // namespace stlogic
