// Bounded exhaustive enumeration of interpretations.
//
// For minimal and intuitionistic kinds the stream covers every model with
// |W| from 1 to the bound over the given atoms: relations are produced as
// reflexive-transitive closures of all generator pair sets (deduplicated by
// the resulting closure and ordered lexicographically), and each atom column
// independently ranges over the up-sets of the relation, which enforces
// persistence by construction.  Minimal models carry a bot column ranging
// the same way; intuitionistic and classical ones pin bot to 0.
//
// Classical enumeration emits one-world models only — values are constant
// across worlds and the relation carries no information, so the one-world
// Boolean valuations are exhaustive for every satisfaction question.
//
// The order is deterministic: world count ascending, then relation, then
// valuation columns (atoms in sorted order, bot last, last column fastest).
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stlogic/model.hpp"

namespace stlogic {

class EnumerationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// worlds x columns guard; STLOGIC_ENUM_CEILING overrides the default.
inline std::uint64_t enumeration_ceiling() {
  if (const char* env = std::getenv("STLOGIC_ENUM_CEILING")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 24;
}

struct EnumOptions {
  std::uint64_t ceiling = enumeration_ceiling();
  // Diagnostic switch for suite self-checks: forces bot to 0 in generated
  // minimal models, collapsing them onto the intuitionistic class.
  bool pin_bottom_false = false;
};

/// All reflexive-transitive relations on n labeled worlds, each as successor
/// masks, sorted lexicographically and deduplicated.
inline std::vector<std::vector<std::uint64_t>> preorders_on(int n) {
  if (n < 1) throw std::invalid_argument("preorders_on needs n >= 1");
  if (n > 5) throw EnumerationError("relation enumeration capped at 5 worlds");
  std::vector<std::pair<int, int>> off_diag;
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v)
      if (w != v) off_diag.emplace_back(w, v);

  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t generator_sets = std::uint64_t{1} << off_diag.size();
  for (std::uint64_t bits = 0; bits < generator_sets; ++bits) {
    std::vector<std::uint64_t> reach(n, 0);
    for (std::size_t i = 0; i < off_diag.size(); ++i)
      if (bits >> i & 1) reach[off_diag[i].first] |= std::uint64_t{1} << off_diag[i].second;
    out.push_back(reflexive_transitive_closure(std::move(reach)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Masks m with: w in m and w R w' imply w' in m; ascending numeric order.
/// These are exactly the persistent truth sets over the relation.
inline std::vector<std::uint64_t> up_sets(const std::vector<std::uint64_t>& reach) {
  const int n = static_cast<int>(reach.size());
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m <= all; ++m) {
    bool closed = true;
    for (int w = 0; w < n && closed; ++w)
      if ((m >> w & 1) && (reach[w] & ~m)) closed = false;
    if (closed) out.push_back(m);
    if (m == all) break;
  }
  return out;
}

class ModelEnumerator {
 public:
  ModelEnumerator(ModelKind kind, int max_worlds, std::set<std::string> atoms,
                  EnumOptions opts = {})
      : kind_(kind),
        max_worlds_(max_worlds),
        atoms_(atoms.begin(), atoms.end()),
        opts_(opts) {
    if (max_worlds < 1) throw std::invalid_argument("max_worlds must be >= 1");
    const std::uint64_t columns = atoms_.size() + 1;  // bot counts as a column
    if (static_cast<std::uint64_t>(max_worlds) * columns > opts_.ceiling)
      throw EnumerationError("enumeration ceiling exceeded: " + std::to_string(max_worlds) +
                             " worlds x " + std::to_string(columns) + " columns > " +
                             std::to_string(opts_.ceiling));
    for (const std::string& a : atoms_)
      if (!valid_atom_name(a)) throw std::invalid_argument("bad atom name '" + a + "'");
    if (kind_ == ModelKind::Classical) {
      classical_valuation_ = 0;
    } else {
      world_count_ = 0;  // advanced to 1 on first next()
    }
  }

  std::optional<Interpretation> next() {
    return kind_ == ModelKind::Classical ? next_classical() : next_kripke();
  }

 private:
  std::optional<Interpretation> next_classical() {
    const std::uint64_t total = std::uint64_t{1} << atoms_.size();
    if (classical_valuation_ >= total) return std::nullopt;
    std::map<std::string, std::uint64_t, std::less<>> masks;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      masks[atoms_[i]] = classical_valuation_ >> i & 1;
    ++classical_valuation_;
    return Interpretation(ModelKind::Classical, {"w1"}, {1}, std::move(masks), 0);
  }

  std::optional<Interpretation> next_kripke() {
    if (!advance_position()) return std::nullopt;
    return build_current();
  }

  // Moves to the next (world count, relation, valuation) position.  Returns
  // false once world counts are exhausted.
  bool advance_position() {
    if (world_count_ == 0) {
      if (!advance_world_count()) return false;
      return true;
    }
    // Odometer over valuation digits, last column fastest.
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (digits_[i] + 1 < upsets_.size()) {
        ++digits_[i];
        return true;
      }
      digits_[i] = 0;
    }
    if (++relation_index_ < relations_.size()) {
      reset_digits();
      return true;
    }
    return advance_world_count();
  }

  bool advance_world_count() {
    if (world_count_ >= max_worlds_) return false;
    ++world_count_;
    relations_ = preorders_on(world_count_);
    relation_index_ = 0;
    reset_digits();
    return true;
  }

  void reset_digits() {
    upsets_ = up_sets(relations_[relation_index_]);
    const std::size_t columns = atoms_.size() + (bottom_column() ? 1 : 0);
    digits_.assign(columns, 0);
  }

  bool bottom_column() const {
    return kind_ == ModelKind::Minimal && !opts_.pin_bottom_false;
  }

  Interpretation build_current() const {
    std::vector<std::string> names;
    names.reserve(world_count_);
    for (int w = 1; w <= world_count_; ++w) names.push_back("w" + std::to_string(w));
    std::map<std::string, std::uint64_t, std::less<>> masks;
    for (std::size_t i = 0; i < atoms_.size(); ++i) masks[atoms_[i]] = upsets_[digits_[i]];
    const std::uint64_t bottom = bottom_column() ? upsets_[digits_.back()] : 0;
    return Interpretation(kind_, std::move(names), relations_[relation_index_], std::move(masks),
                          bottom);
  }

  ModelKind kind_;
  int max_worlds_;
  std::vector<std::string> atoms_;  // sorted (from std::set)
  EnumOptions opts_;

  // Kripke stream state.
  int world_count_ = 0;
  std::vector<std::vector<std::uint64_t>> relations_;
  std::size_t relation_index_ = 0;
  std::vector<std::uint64_t> upsets_;
  std::vector<std::size_t> digits_;

  // Classical stream state.
  std::uint64_t classical_valuation_ = ~std::uint64_t{0};
};

/// Collects the whole stream; intended for tests and small bounds.
inline std::vector<Interpretation> enumerate_models(ModelKind kind, int max_worlds,
                                                    const std::set<std::string>& atoms,
                                                    EnumOptions opts = {}) {
  ModelEnumerator e(kind, max_worlds, atoms, opts);
  std::vector<Interpretation> out;
  while (auto m = e.next()) out.push_back(std::move(*m));
  return out;
}

}  // namespace stlogic
