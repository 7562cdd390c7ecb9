// Evaluation of formulas in interpretations and the satisfaction of
// strict-tolerant inferences and metainferences by a single interpretation.
//
// Value clauses at a world w:
//   atoms, bot   read from the valuation
//   A & B        1 iff both are 1 at w
//   A | B        1 iff either is 1 at w
//   A -> B       1 iff every w' with w R w' has A 0 or B 1 at w'
//
// Truth in an interpretation is value 1 at all worlds; falsity is truth of
// the negation (strong falsity — in minimal interpretations a formula can
// be both true and false).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stlogic/formula.hpp"
#include "stlogic/model.hpp"
#include "stlogic/sequent.hpp"

namespace stlogic {

enum class ImplicationRule {
  Standard,
  // Diagnostic switch for suite self-checks: reads the implication clause as
  // a sufficient condition only.  Nothing ever forces value 0, so every
  // implication evaluates to 1.
  SufficientOnly,
};

struct EvalOptions {
  ImplicationRule implication = ImplicationRule::Standard;
};

/// A formula flattened to a children-first instruction list, so one formula
/// can be evaluated against many models without re-walking the tree.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f) {
    const std::vector<Formula> order = f.subformulas();
    std::unordered_map<Formula, int, Formula::Hash> index;
    index.reserve(order.size());
    steps_.reserve(order.size());
    for (const Formula& sub : order) {
      Step s;
      s.kind = sub.kind();
      if (sub.kind() == FormulaKind::Atom) {
        s.atom = sub.atom_name();
      } else if (sub.is_binary()) {
        s.lhs = index.at(sub.left());
        s.rhs = index.at(sub.right());
      }
      index.emplace(sub, static_cast<int>(steps_.size()));
      steps_.push_back(std::move(s));
    }
  }

  /// Worlds of m at which the formula has value 1.
  std::uint64_t eval_mask(const Interpretation& m, const EvalOptions& opts = {}) const {
    const std::uint64_t all = m.all_worlds_mask();
    const int n = m.world_count();
    std::vector<std::uint64_t> value(steps_.size());
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const Step& s = steps_[i];
      switch (s.kind) {
        case FormulaKind::Atom:
          value[i] = m.atom_mask(s.atom);
          break;
        case FormulaKind::Bottom:
          value[i] = m.bottom_mask();
          break;
        case FormulaKind::And:
          value[i] = value[s.lhs] & value[s.rhs];
          break;
        case FormulaKind::Or:
          value[i] = value[s.lhs] | value[s.rhs];
          break;
        case FormulaKind::Implies: {
          if (opts.implication == ImplicationRule::SufficientOnly) {
            value[i] = all;
            break;
          }
          const std::uint64_t failing = value[s.lhs] & ~value[s.rhs];
          std::uint64_t v = 0;
          for (int w = 0; w < n; ++w)
            if ((m.successors(w) & failing) == 0) v |= std::uint64_t{1} << w;
          value[i] = v;
          break;
        }
      }
    }
    return value.back();
  }

 private:
  struct Step {
    FormulaKind kind;
    int lhs = -1;
    int rhs = -1;
    std::string atom;
  };
  std::vector<Step> steps_;
};

inline std::uint64_t eval_mask(const Interpretation& m, const Formula& f,
                               const EvalOptions& opts = {}) {
  return CompiledFormula(f).eval_mask(m, opts);
}

/// Value of f at one world, 0 or 1.
inline int eval(const Interpretation& m, int world, const Formula& f,
                const EvalOptions& opts = {}) {
  if (world < 0 || world >= m.world_count())
    throw std::out_of_range("unknown world index " + std::to_string(world));
  return static_cast<int>(eval_mask(m, f, opts) >> world & 1);
}

inline int eval(const Interpretation& m, std::string_view world, const Formula& f,
                const EvalOptions& opts = {}) {
  const auto w = m.world_index(world);
  if (!w) throw std::out_of_range("unknown world '" + std::string(world) + "'");
  return eval(m, *w, f, opts);
}

inline bool is_true(const Interpretation& m, const Formula& f, const EvalOptions& opts = {}) {
  return eval_mask(m, f, opts) == m.all_worlds_mask();
}

inline bool is_false(const Interpretation& m, const Formula& f, const EvalOptions& opts = {}) {
  return is_true(m, Formula::negate(f), opts);
}

/// An interpretation satisfies an inference unless it makes every antecedent
/// formula true and every succedent formula false.  Both quantifiers are
/// vacuous on empty lists.
inline bool satisfies_inference(const Interpretation& m, const Inference& inf,
                                const EvalOptions& opts = {}) {
  for (const Formula& g : inf.antecedent)
    if (!is_true(m, g, opts)) return true;
  for (const Formula& d : inf.succedent)
    if (!is_false(m, d, opts)) return true;
  return false;
}

/// An interpretation satisfies a metainference iff it fails some premise
/// inference or satisfies the conclusion inference.
inline bool satisfies_metainference(const Interpretation& m, const Metainference& meta,
                                    const EvalOptions& opts = {}) {
  for (const Inference& p : meta.premises)
    if (!satisfies_inference(m, p, opts)) return true;
  return satisfies_inference(m, meta.conclusion, opts);
}

}  // namespace stlogic
