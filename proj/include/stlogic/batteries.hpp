// Seeded property batteries: each one checks an invariant of the semantics
// over enumerated models and sampled formulas, and reports the violations it
// found (a correct build reports none).
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stlogic/consequence.hpp"
#include "stlogic/enumerate.hpp"
#include "stlogic/generators.hpp"
#include "stlogic/model.hpp"
#include "stlogic/parse.hpp"
#include "stlogic/semantics.hpp"
#include "stlogic/sequent.hpp"

namespace stlogic {

struct BatteryReport {
  std::string name;
  std::uint64_t seed = 0;
  int checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return !failures.empty() ? false : checked > 0; }

  std::string summary() const {
    std::string out = name + ": checked " + std::to_string(checked);
    if (failures.empty()) return out + ", no violations";
    out += ", " + std::to_string(failures.size()) + " violation(s)";
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i) out += "\n    " + failures[i];
    if (failures.size() > 5) out += "\n    ...";
    return out;
  }
};

namespace detail {

/// Every formula of nesting depth <= 2 over the given atoms (bot included).
inline std::vector<Formula> small_formulas(const std::vector<std::string>& atoms) {
  std::vector<Formula> level;
  level.push_back(Formula::bottom());
  for (const std::string& a : atoms) level.push_back(Formula::atom(a));
  for (int round = 0; round < 2; ++round) {
    const std::vector<Formula> prev = level;
    for (const Formula& l : prev)
      for (const Formula& r : prev) {
        level.push_back(Formula::conj(l, r));
        level.push_back(Formula::disj(l, r));
        level.push_back(Formula::implies(l, r));
      }
    // Dedup keeps the cross product from exploding on repeated rounds.
    std::vector<Formula> unique;
    std::unordered_set<Formula, Formula::Hash> seen;
    for (const Formula& f : level)
      if (seen.insert(f).second) unique.push_back(f);
    level = std::move(unique);
  }
  return level;
}

inline Interpretation battery_trivial(const std::set<std::string>& atoms,
                                      const CheckOptions& opts) {
  Interpretation t = trivial_model(atoms);
  if (!opts.pin_bottom_false_in_minimal) return t;
  return Interpretation(ModelKind::Minimal, t.world_names(), t.relation(), t.atom_masks(), 0);
}

/// Independent truth-table evaluation, bot read as false.
inline bool classical_eval(const Formula& f, const std::map<std::string, bool>& env) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto it = env.find(f.atom_name());
      return it != env.end() && it->second;
    }
    case FormulaKind::Bottom:
      return false;
    case FormulaKind::And:
      return classical_eval(f.left(), env) && classical_eval(f.right(), env);
    case FormulaKind::Or:
      return classical_eval(f.left(), env) || classical_eval(f.right(), env);
    case FormulaKind::Implies:
      return !classical_eval(f.left(), env) || classical_eval(f.right(), env);
  }
  return false;
}

}  // namespace detail

/// Truth of any formula propagates along the accessibility relation, for
/// every enumerated minimal model (the bound covers every countermodel shape
/// the other batteries rely on).
inline BatteryReport heredity_battery(std::uint64_t seed, const CheckOptions& opts = {},
                                      int max_worlds = 3, int sampled = 300) {
  BatteryReport report{"heredity", seed};
  std::vector<Formula> formulas = detail::small_formulas({"a", "b"});
  FormulaSampler sampler(seed, SamplerParams{4, 2});
  for (int i = 0; i < sampled; ++i) formulas.push_back(sampler.next());

  std::vector<CompiledFormula> compiled;
  compiled.reserve(formulas.size());
  for (const Formula& f : formulas) compiled.emplace_back(f);

  EnumOptions eopts;
  eopts.pin_bottom_false = opts.pin_bottom_false_in_minimal;
  ModelEnumerator models(ModelKind::Minimal, max_worlds, {"a", "b"}, eopts);
  while (auto m = models.next()) {
    for (std::size_t i = 0; i < compiled.size(); ++i) {
      const std::uint64_t mask = compiled[i].eval_mask(*m, opts.eval);
      ++report.checked;
      for (int w = 0; w < m->world_count(); ++w) {
        if ((mask >> w & 1) && (m->successors(w) & ~mask)) {
          report.failures.push_back("formula " + formulas[i].to_string() + " true at " +
                                    m->world_name(w) + " but lost at a successor in\n" +
                                    save_model(*m));
          break;
        }
      }
    }
  }
  return report;
}

/// Satisfaction of an inference equals satisfaction of the inference with
/// its succedent collapsed to a single disjunction, in every kind of model.
inline BatteryReport reduction_battery(std::uint64_t seed, int pairs = 500,
                                       const CheckOptions& opts = {}) {
  BatteryReport report{"succedent-reduction", seed};
  EnumOptions eopts;
  eopts.pin_bottom_false = opts.pin_bottom_false_in_minimal;
  const std::set<std::string> atoms{"a", "b", "c"};
  const std::vector<std::vector<Interpretation>> pools{
      enumerate_models(ModelKind::Minimal, 3, atoms, eopts),
      enumerate_models(ModelKind::Intuitionistic, 3, atoms),
      enumerate_models(ModelKind::Classical, 1, atoms),
  };

  InferenceSamplerParams params;
  params.max_succedent = 3;
  InferenceSampler sampler(seed, params);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < pairs; ++i) {
    const std::vector<Interpretation>& pool = pools[i % pools.size()];
    const Interpretation& m = pool[rng.below(static_cast<int>(pool.size()))];
    const Inference inf = sampler.next();
    ++report.checked;
    if (satisfies_inference(m, inf, opts.eval) !=
        satisfies_inference(m, reduce_succedent(inf), opts.eval))
      report.failures.push_back("mismatch on " + inf.to_string() + " in\n" + save_model(m));
  }
  return report;
}

/// Single-succedent strict-tolerant inferences over intuitionistic models
/// agree with exact classical consequence in both directions.  Classical
/// countermodels re-tag and re-check as intuitionistic ones.
inline BatteryReport classical_collapse_battery(std::uint64_t seed, int trials = 200,
                                                Bound bound = {3, 0},
                                                const CheckOptions& opts = {}) {
  BatteryReport report{"classical-collapse", seed};
  InferenceSampler sampler(seed);
  for (int i = 0; i < trials; ++i) {
    const Inference inf = sampler.next();
    ++report.checked;
    const Query classical{ModelKind::Classical, QueryMode::Inference, inf, {}};
    const Query bounded{ModelKind::Intuitionistic, QueryMode::Inference, inf, bound};
    const Verdict exact = check_classical(classical, opts);
    const Verdict search = check_bounded(bounded, opts);
    if (exact.failed() && !search.failed()) {
      report.failures.push_back("classical countermodel but no bounded intuitionistic one: " +
                                inf.to_string());
      continue;
    }
    if (!exact.failed() && search.failed()) {
      report.failures.push_back("bounded intuitionistic countermodel to a classical validity: " +
                                inf.to_string());
      continue;
    }
    if (exact.failed()) {
      const Interpretation retagged = exact.certificate->with_kind(ModelKind::Intuitionistic);
      if (!validate(retagged).empty() || !refuted_by(retagged, bounded, opts.eval))
        report.failures.push_back("classical certificate does not re-check intuitionistically: " +
                                  inf.to_string());
    }
  }
  return report;
}

/// Classically valid single-succedent entailments admit no bounded
/// intuitionistic countermodel to the double-negated conclusion, while the
/// known two-world minimal witness still refutes its double negation.
inline BatteryReport glivenko_battery(std::uint64_t seed, int valid_pairs = 100,
                                      Bound bound = {4, 0}, const CheckOptions& opts = {}) {
  BatteryReport report{"glivenko", seed};
  InferenceSampler sampler(seed);
  int found = 0;
  for (int attempt = 0; attempt < valid_pairs * 200 && found < valid_pairs; ++attempt) {
    const Inference inf = sampler.next();
    const Query classical{ModelKind::Classical, QueryMode::Tarskian, inf, {}};
    if (check_classical(classical, opts).failed()) continue;
    ++found;
    ++report.checked;
    Inference doubled{inf.antecedent, {Formula::negate(Formula::negate(inf.succedent.front()))}};
    const Query intu{ModelKind::Intuitionistic, QueryMode::Tarskian, std::move(doubled), bound};
    if (const Verdict v = check_bounded(intu, opts); v.failed())
      report.failures.push_back("intuitionistic countermodel to double-negated conclusion of " +
                                inf.to_string() + ":\n" + save_model(*v.certificate));
  }
  if (found < valid_pairs)
    report.failures.push_back("sampler produced only " + std::to_string(found) +
                              " classically valid pairs");

  // The contrast case: the same transfer fails in minimal logic.
  const Formula witness =
      Formula::negate(Formula::negate(parse_formula("~a -> (a -> b)")));
  const Query minimal{ModelKind::Minimal, QueryMode::Tarskian, Inference{{}, {witness}}, {2, 0}};
  ++report.checked;
  if (!check_bounded(minimal, opts).failed())
    report.failures.push_back("no minimal countermodel to " + witness.to_string());
  const Query intu_witness{ModelKind::Intuitionistic, QueryMode::Tarskian,
                           Inference{{}, {witness}}, bound};
  ++report.checked;
  if (check_bounded(intu_witness, opts).failed())
    report.failures.push_back("unexpected intuitionistic countermodel to " + witness.to_string());
  return report;
}

/// No strict-tolerant inference with a nonempty succedent holds over minimal
/// interpretations; the single-world all-true model certifies each failure.
inline BatteryReport minimal_st_failure_battery(std::uint64_t seed, int trials = 100,
                                                Bound bound = {3, 0},
                                                const CheckOptions& opts = {}) {
  BatteryReport report{"minimal-st-failure", seed};
  InferenceSamplerParams params;
  params.max_succedent = 2;
  InferenceSampler sampler(seed, params);
  for (int i = 0; i < trials; ++i) {
    const Inference inf = sampler.next();
    ++report.checked;
    const Query q{ModelKind::Minimal, QueryMode::Inference, inf, bound};
    if (!check_bounded(q, opts).failed()) {
      report.failures.push_back("no minimal countermodel found for " + inf.to_string());
      continue;
    }
    const Interpretation trivial = detail::battery_trivial(atoms_of(inf), opts);
    if (satisfies_inference(trivial, inf, opts.eval))
      report.failures.push_back("all-true model fails to refute " + inf.to_string());
  }
  return report;
}

/// In the single-world all-true model every formula is simultaneously true
/// and false.
inline BatteryReport trivial_totality_battery(std::uint64_t seed, int trials = 100,
                                              const CheckOptions& opts = {}) {
  BatteryReport report{"trivial-model-totality", seed};
  FormulaSampler sampler(seed);
  const Interpretation trivial = detail::battery_trivial({"a", "b", "c"}, opts);
  for (int i = 0; i < trials; ++i) {
    const Formula f = sampler.next();
    ++report.checked;
    if (!is_true(trivial, f, opts.eval) || !is_false(trivial, f, opts.eval))
      report.failures.push_back(f.to_string() + " is not both true and false");
  }
  return report;
}

/// In intuitionistic models falsity collapses to value 0 at every world.
inline BatteryReport falsity_collapse_battery(std::uint64_t seed, const CheckOptions& opts = {},
                                              int sampled = 200) {
  BatteryReport report{"intuitionistic-falsity-collapse", seed};
  std::vector<Formula> formulas = detail::small_formulas({"a", "b"});
  FormulaSampler sampler(seed, SamplerParams{4, 2});
  for (int i = 0; i < sampled; ++i) formulas.push_back(sampler.next());
  std::vector<CompiledFormula> compiled;
  for (const Formula& f : formulas) compiled.emplace_back(f);

  ModelEnumerator models(ModelKind::Intuitionistic, 3, {"a", "b"});
  while (auto m = models.next()) {
    for (std::size_t i = 0; i < compiled.size(); ++i) {
      ++report.checked;
      const bool nowhere_true = compiled[i].eval_mask(*m, opts.eval) == 0;
      if (is_false(*m, formulas[i], opts.eval) != nowhere_true) {
        report.failures.push_back("falsity of " + formulas[i].to_string() +
                                  " disagrees with value 0 everywhere in\n" + save_model(*m));
      }
    }
  }
  return report;
}

/// Classical models are bivalent (false iff not true) and inference
/// satisfaction matches the independent truth-table reading.
inline BatteryReport bivalence_battery(std::uint64_t seed, int trials = 200,
                                       const CheckOptions& opts = {}) {
  BatteryReport report{"classical-bivalence", seed};
  const std::vector<std::string> atom_list{"a", "b", "c"};
  FormulaSampler formulas(seed);
  InferenceSamplerParams params;
  params.max_succedent = 2;
  InferenceSampler inferences(seed ^ 0x5851f42d4c957f2dULL, params);

  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    std::map<std::string, bool> env;
    std::map<std::string, std::uint64_t, std::less<>> masks;
    for (std::size_t i = 0; i < atom_list.size(); ++i) {
      env[atom_list[i]] = (bits >> i & 1) != 0;
      masks[atom_list[i]] = bits >> i & 1;
    }
    const Interpretation m(ModelKind::Classical, {"w1"}, {1}, std::move(masks), 0);

    for (int t = 0; t < trials / 8 + 1; ++t) {
      const Formula f = formulas.next();
      ++report.checked;
      if (is_false(m, f, opts.eval) == is_true(m, f, opts.eval))
        report.failures.push_back("bivalence broken for " + f.to_string() + " under valuation " +
                                  std::to_string(bits));
      if (is_true(m, f, opts.eval) != detail::classical_eval(f, env))
        report.failures.push_back("truth-table disagreement for " + f.to_string() +
                                  " under valuation " + std::to_string(bits));

      const Inference inf = inferences.next();
      ++report.checked;
      bool antecedent_true = true;
      for (const Formula& g : inf.antecedent) antecedent_true &= detail::classical_eval(g, env);
      bool succedent_false = true;
      for (const Formula& d : inf.succedent) succedent_false &= !detail::classical_eval(d, env);
      const bool table_reading = !(antecedent_true && succedent_false);
      if (satisfies_inference(m, inf, opts.eval) != table_reading)
        report.failures.push_back("inference satisfaction disagrees with truth tables: " +
                                  inf.to_string());
    }
  }
  return report;
}

/// A metainference with no premises is satisfied exactly when its conclusion
/// inference is.
inline BatteryReport empty_premise_meta_battery(std::uint64_t seed, int trials = 100,
                                                const CheckOptions& opts = {}) {
  BatteryReport report{"empty-premise-metainference", seed};
  InferenceSamplerParams params;
  params.min_succedent = 0;
  params.max_succedent = 2;
  InferenceSampler sampler(seed, params);
  const std::vector<Interpretation> pool =
      enumerate_models(ModelKind::Minimal, 2, {"a", "b"});
  for (int i = 0; i < trials; ++i) {
    const Inference s = sampler.next();
    const Metainference meta{{}, s};
    for (const Interpretation& m : pool) {
      ++report.checked;
      if (satisfies_metainference(m, meta, opts.eval) != satisfies_inference(m, s, opts.eval)) {
        report.failures.push_back("empty-premise mismatch on " + meta.to_string() + " in\n" +
                                  save_model(m));
        break;
      }
    }
  }
  return report;
}

}  // namespace stlogic
