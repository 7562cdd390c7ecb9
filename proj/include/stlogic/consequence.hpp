// Consequence checking over model classes.
//
// Classical queries are decided exactly by exhausting the one-world Boolean
// valuations over the payload's atoms.  Minimal and intuitionistic queries
// are semi-decided by bounded exhaustive search: the first countermodel in
// canonical enumeration order is the certificate, and a clean sweep is
// reported as holds-up-to-bound, never as validity.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "stlogic/enumerate.hpp"
#include "stlogic/model.hpp"
#include "stlogic/semantics.hpp"
#include "stlogic/sequent.hpp"

namespace stlogic {

enum class QueryMode : unsigned char {
  Tarskian,       // truth preservation; single succedent formula
  Inference,      // strict-tolerant: truth of all antecedents vs non-falsity
  Metainference,  // strict-tolerant metainference
};

inline std::string_view to_string(QueryMode m) {
  switch (m) {
    case QueryMode::Tarskian: return "tarskian";
    case QueryMode::Inference: return "st";
    case QueryMode::Metainference: return "meta";
  }
  return "st";
}

struct Bound {
  int max_worlds = 3;
  int extra_atoms = 0;
};

struct Query {
  ModelKind logic;
  QueryMode mode;
  std::variant<Inference, Metainference> payload;
  Bound bound{};
};

struct Verdict {
  enum class Outcome { HoldsExact, HoldsUpToBound, Fails };

  Outcome outcome;
  std::optional<Interpretation> certificate;  // set iff outcome == Fails
  Bound bound{};                              // echoed for HoldsUpToBound

  bool failed() const { return outcome == Outcome::Fails; }

  std::string describe() const {
    switch (outcome) {
      case Outcome::HoldsExact:
        return "holds-exact";
      case Outcome::HoldsUpToBound:
        return "holds-up-to-bound(max-worlds=" + std::to_string(bound.max_worlds) + ")";
      case Outcome::Fails:
        return "fails";
    }
    return "fails";
  }
};

struct CheckOptions {
  EvalOptions eval{};
  // Diagnostic switch, see EnumOptions::pin_bottom_false.
  bool pin_bottom_false_in_minimal = false;
  std::optional<std::uint64_t> ceiling{};
};

inline const Inference& inference_payload(const Query& q) {
  const Inference* inf = std::get_if<Inference>(&q.payload);
  if (!inf) throw std::invalid_argument("query mode requires an inference payload");
  if (q.mode == QueryMode::Tarskian && inf->succedent.size() != 1)
    throw std::invalid_argument("tarskian queries take exactly one succedent formula");
  return *inf;
}

inline const Metainference& metainference_payload(const Query& q) {
  const Metainference* meta = std::get_if<Metainference>(&q.payload);
  if (!meta) throw std::invalid_argument("meta queries require a metainference payload");
  return *meta;
}

inline std::set<std::string> query_atoms(const Query& q) {
  if (q.mode == QueryMode::Metainference) return atoms_of(metainference_payload(q));
  return atoms_of(inference_payload(q));
}

/// Payload atoms plus bound.extra_atoms fresh names (x1, x2, ... skipping
/// collisions).
inline std::set<std::string> search_atoms(const Query& q) {
  std::set<std::string> atoms = query_atoms(q);
  int added = 0;
  for (int i = 1; added < q.bound.extra_atoms; ++i) {
    const std::string fresh = "x" + std::to_string(i);
    if (atoms.insert(fresh).second) ++added;
  }
  return atoms;
}

/// Does m witness the failure of the query's payload?
inline bool refuted_by(const Interpretation& m, const Query& q, const EvalOptions& opts = {}) {
  switch (q.mode) {
    case QueryMode::Tarskian: {
      const Inference& inf = inference_payload(q);
      for (const Formula& g : inf.antecedent)
        if (!is_true(m, g, opts)) return false;
      return !is_true(m, inf.succedent.front(), opts);
    }
    case QueryMode::Inference:
      return !satisfies_inference(m, inference_payload(q), opts);
    case QueryMode::Metainference:
      return !satisfies_metainference(m, metainference_payload(q), opts);
  }
  return false;
}

/// Exact decision for classical logic; never returns HoldsUpToBound.
inline Verdict check_classical(const Query& q, const CheckOptions& opts = {}) {
  if (q.logic != ModelKind::Classical)
    throw std::invalid_argument("check_classical requires classical logic");
  const std::set<std::string> atoms = search_atoms(q);
  const std::uint64_t ceiling = opts.ceiling.value_or(enumeration_ceiling());
  if (atoms.size() + 1 > ceiling || atoms.size() > 20)
    throw EnumerationError("classical atom count " + std::to_string(atoms.size()) +
                           " exceeds the enumeration ceiling");
  ModelEnumerator models(ModelKind::Classical, 1, atoms, EnumOptions{ceiling, false});
  while (auto m = models.next())
    if (refuted_by(*m, q, opts.eval)) return Verdict{Verdict::Outcome::Fails, std::move(*m), {}};
  return Verdict{Verdict::Outcome::HoldsExact, std::nullopt, {}};
}

/// Bounded search for minimal/intuitionistic logic.  The certificate is the
/// first refuting model in canonical enumeration order.
inline Verdict check_bounded(const Query& q, const CheckOptions& opts = {}) {
  if (q.logic == ModelKind::Classical)
    throw std::invalid_argument("check_bounded requires minimal or intuitionistic logic");
  EnumOptions eopts;
  eopts.ceiling = opts.ceiling.value_or(enumeration_ceiling());
  eopts.pin_bottom_false = opts.pin_bottom_false_in_minimal && q.logic == ModelKind::Minimal;
  ModelEnumerator models(q.logic, q.bound.max_worlds, search_atoms(q), eopts);
  while (auto m = models.next())
    if (refuted_by(*m, q, opts.eval))
      return Verdict{Verdict::Outcome::Fails, std::move(*m), q.bound};
  return Verdict{Verdict::Outcome::HoldsUpToBound, std::nullopt, q.bound};
}

inline Verdict check(const Query& q, const CheckOptions& opts = {}) {
  return q.logic == ModelKind::Classical ? check_classical(q, opts) : check_bounded(q, opts);
}

}  // namespace stlogic
