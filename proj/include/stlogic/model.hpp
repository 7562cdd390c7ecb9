// Finite Kripke interpretations: a nonempty world set, a reflexive and
// transitive accessibility relation, and a persistent two-valued valuation
// of atoms and bot at each world.
//
// Kinds form a chain: every classical interpretation is intuitionistic
// (bot false everywhere) and every intuitionistic one is minimal (bot may
// be true at worlds only in minimal interpretations; classical ones also
// keep every atom constant across worlds).
//
// Worlds are indexed 0..n-1 (n <= 64); world sets and valuations are stored
// as bitmasks over those indices.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stlogic {

enum class ModelKind : unsigned char { Minimal, Intuitionistic, Classical };

inline std::string_view to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Minimal: return "minimal";
    case ModelKind::Intuitionistic: return "intuitionistic";
    case ModelKind::Classical: return "classical";
  }
  return "minimal";
}

inline std::optional<ModelKind> model_kind_from_string(std::string_view s) {
  if (s == "minimal") return ModelKind::Minimal;
  if (s == "intuitionistic") return ModelKind::Intuitionistic;
  if (s == "classical") return ModelKind::Classical;
  return std::nullopt;
}

/// One failed model constraint: which clause broke and a witness.
struct Violation {
  std::string clause;
  std::string detail;
};

/// Least reflexive-transitive superset of the given successor masks.
inline std::vector<std::uint64_t> reflexive_transitive_closure(std::vector<std::uint64_t> reach) {
  const int n = static_cast<int>(reach.size());
  for (int w = 0; w < n; ++w) reach[w] |= std::uint64_t{1} << w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < n; ++w) {
      std::uint64_t acc = reach[w];
      for (int v = 0; v < n; ++v)
        if (reach[w] >> v & 1) acc |= reach[v];
      if (acc != reach[w]) {
        reach[w] = acc;
        changed = true;
      }
    }
  }
  return reach;
}

/// Pair-set form of the closure: pairs are (from, to) world indices.
inline std::vector<std::uint64_t> reflexive_transitive_closure(
    int world_count, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::uint64_t> reach(world_count, 0);
  for (auto [from, to] : pairs) {
    if (from < 0 || from >= world_count || to < 0 || to >= world_count)
      throw std::invalid_argument("relation pair outside world set");
    reach[from] |= std::uint64_t{1} << to;
  }
  return reflexive_transitive_closure(std::move(reach));
}

class Interpretation {
 public:
  /// Raw constructor: the relation is taken as given (not closed), so that
  /// validate() can report reflexivity/transitivity violations.
  Interpretation(ModelKind kind, std::vector<std::string> world_names,
                 std::vector<std::uint64_t> reach,
                 std::map<std::string, std::uint64_t, std::less<>> atom_masks,
                 std::uint64_t bottom_mask)
      : kind_(kind),
        worlds_(std::move(world_names)),
        reach_(std::move(reach)),
        atoms_(std::move(atom_masks)),
        bottom_(bottom_mask) {
    if (worlds_.empty()) throw std::invalid_argument("world set must be nonempty");
    if (worlds_.size() > 64) throw std::invalid_argument("at most 64 worlds supported");
    if (reach_.size() != worlds_.size())
      throw std::invalid_argument("relation size does not match world count");
    const std::uint64_t all = all_worlds_mask();
    for (std::uint64_t row : reach_)
      if (row & ~all) throw std::invalid_argument("relation mentions unknown world");
    for (const auto& [name, mask] : atoms_)
      if (mask & ~all) throw std::invalid_argument("valuation mentions unknown world");
    if (bottom_ & ~all) throw std::invalid_argument("valuation mentions unknown world");
  }

  ModelKind kind() const { return kind_; }
  int world_count() const { return static_cast<int>(worlds_.size()); }
  const std::vector<std::string>& world_names() const { return worlds_; }
  const std::string& world_name(int w) const { return worlds_.at(w); }

  std::optional<int> world_index(std::string_view name) const {
    for (std::size_t i = 0; i < worlds_.size(); ++i)
      if (worlds_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  std::uint64_t all_worlds_mask() const {
    return worlds_.size() == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << worlds_.size()) - 1;
  }

  std::uint64_t successors(int w) const { return reach_.at(w); }
  bool related(int w, int v) const { return reach_.at(w) >> v & 1; }
  const std::vector<std::uint64_t>& relation() const { return reach_; }

  /// Worlds at which the named atom is true; atoms never assigned are 0
  /// everywhere.
  std::uint64_t atom_mask(std::string_view name) const {
    auto it = atoms_.find(name);
    return it == atoms_.end() ? 0 : it->second;
  }

  std::uint64_t bottom_mask() const { return bottom_; }

  const std::map<std::string, std::uint64_t, std::less<>>& atom_masks() const { return atoms_; }

  Interpretation with_kind(ModelKind k) const {
    Interpretation copy = *this;
    copy.kind_ = k;
    return copy;
  }

  /// Identical world count, relation and valuation (names ignored).
  bool same_structure(const Interpretation& o) const {
    return reach_ == o.reach_ && atoms_ == o.atoms_ && bottom_ == o.bottom_;
  }

 private:
  ModelKind kind_;
  std::vector<std::string> worlds_;
  std::vector<std::uint64_t> reach_;
  std::map<std::string, std::uint64_t, std::less<>> atoms_;
  std::uint64_t bottom_;
};

/// Checks every constraint the declared kind imposes; an empty result means
/// the interpretation is a valid model of its kind.  Violations are data,
/// not errors.
inline std::vector<Violation> validate(const Interpretation& m) {
  std::vector<Violation> out;
  const int n = m.world_count();

  for (int w = 0; w < n; ++w)
    if (!m.related(w, w))
      out.push_back({"reflexivity", "world " + m.world_name(w) + " does not see itself"});

  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v)
      if (m.related(w, v) && (m.successors(v) & ~m.successors(w)))
        out.push_back({"transitivity",
                       m.world_name(w) + " sees " + m.world_name(v) +
                           " but not all of its successors"});

  auto check_persistence = [&](std::string_view name, std::uint64_t mask) {
    for (int w = 0; w < n; ++w) {
      if (!(mask >> w & 1)) continue;
      const std::uint64_t lost = m.successors(w) & ~mask;
      for (int v = 0; v < n; ++v)
        if (lost >> v & 1)
          out.push_back({"persistence", std::string(name) + " true at " + m.world_name(w) +
                                            " but not at successor " + m.world_name(v)});
    }
  };
  for (const auto& [name, mask] : m.atom_masks()) check_persistence(name, mask);
  check_persistence("bot", m.bottom_mask());

  if (m.kind() != ModelKind::Minimal) {
    for (int w = 0; w < n; ++w)
      if (m.bottom_mask() >> w & 1)
        out.push_back({"bottom-false", "bot true at " + m.world_name(w)});
  }

  if (m.kind() == ModelKind::Classical) {
    const std::uint64_t all = m.all_worlds_mask();
    for (const auto& [name, mask] : m.atom_masks())
      if (mask != 0 && mask != all)
        out.push_back({"constant-valuation", name + " varies across worlds"});
  }

  return out;
}

/// Single-world minimal interpretation making the listed atoms and bot all
/// true; it makes every formula over those atoms simultaneously true and
/// false.
inline Interpretation trivial_model(const std::set<std::string>& atoms) {
  std::map<std::string, std::uint64_t, std::less<>> masks;
  for (const std::string& a : atoms) masks[a] = 1;
  return Interpretation(ModelKind::Minimal, {"w1"}, {1}, std::move(masks), 1);
}

// ---------------------------------------------------------------------------
// Model text format (line oriented, '#' starts a comment):
//
//   kind minimal|intuitionistic|classical
//   world <name>                     declaration order is canonical
//   rel <name> <name>                generator pairs; closed on load
//   true <world> <atom-or-bot> ...   unlisted atoms are 0
// ---------------------------------------------------------------------------

class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what, std::vector<Violation> violations = {})
      : std::runtime_error(what), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

inline bool valid_atom_name(std::string_view s) {
  if (s.empty() || s == "bot") return false;
  if (s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s.substr(1))
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  return true;
}

inline Interpretation load_model(std::istream& in) {
  std::optional<ModelKind> kind;
  std::vector<std::string> worlds;
  std::vector<std::pair<int, int>> rel;
  std::map<std::string, std::uint64_t, std::less<>> atoms;
  std::uint64_t bottom = 0;

  auto world_index = [&](const std::string& name, int line_no) {
    for (std::size_t i = 0; i < worlds.size(); ++i)
      if (worlds[i] == name) return static_cast<int>(i);
    throw ModelError("line " + std::to_string(line_no) + ": unknown world '" + name + "'");
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string directive;
    if (!(fields >> directive)) continue;

    if (directive == "kind") {
      std::string word;
      if (!(fields >> word) || !(kind = model_kind_from_string(word)))
        throw ModelError("line " + std::to_string(line_no) + ": bad kind");
    } else if (directive == "world") {
      std::string name;
      if (!(fields >> name))
        throw ModelError("line " + std::to_string(line_no) + ": world needs a name");
      for (const std::string& w : worlds)
        if (w == name)
          throw ModelError("line " + std::to_string(line_no) + ": duplicate world '" + name + "'");
      worlds.push_back(name);
    } else if (directive == "rel") {
      std::string from, to;
      if (!(fields >> from >> to))
        throw ModelError("line " + std::to_string(line_no) + ": rel needs two worlds");
      rel.emplace_back(world_index(from, line_no), world_index(to, line_no));
    } else if (directive == "true") {
      std::string world;
      if (!(fields >> world))
        throw ModelError("line " + std::to_string(line_no) + ": true needs a world");
      const int w = world_index(world, line_no);
      std::string atom;
      while (fields >> atom) {
        if (atom == "bot")
          bottom |= std::uint64_t{1} << w;
        else if (valid_atom_name(atom))
          atoms[atom] |= std::uint64_t{1} << w;
        else
          throw ModelError("line " + std::to_string(line_no) + ": bad atom name '" + atom + "'");
      }
    } else {
      throw ModelError("line " + std::to_string(line_no) + ": unknown directive '" + directive +
                       "'");
    }
  }

  if (!kind) throw ModelError("missing 'kind' line");
  if (worlds.empty()) throw ModelError("no worlds declared");

  std::vector<std::uint64_t> reach =
      reflexive_transitive_closure(static_cast<int>(worlds.size()), rel);
  Interpretation m(*kind, std::move(worlds), std::move(reach), std::move(atoms), bottom);
  if (std::vector<Violation> bad = validate(m); !bad.empty()) {
    std::string what = "model violates its declared kind:";
    for (const Violation& v : bad) what += "\n  " + v.clause + ": " + v.detail;
    throw ModelError(what, std::move(bad));
  }
  return m;
}

inline Interpretation load_model(const std::string& text) {
  std::istringstream in(text);
  return load_model(in);
}

inline std::string save_model(const Interpretation& m) {
  std::string out = "kind " + std::string(to_string(m.kind())) + "\n";
  for (const std::string& w : m.world_names()) out += "world " + w + "\n";
  for (int w = 0; w < m.world_count(); ++w)
    for (int v = 0; v < m.world_count(); ++v)
      if (w != v && m.related(w, v))
        out += "rel " + m.world_name(w) + " " + m.world_name(v) + "\n";
  for (int w = 0; w < m.world_count(); ++w) {
    std::string trues;
    for (const auto& [name, mask] : m.atom_masks())
      if (mask >> w & 1) trues += " " + name;
    if (m.bottom_mask() >> w & 1) trues += " bot";
    if (!trues.empty()) out += "true " + m.world_name(w) + trues + "\n";
  }
  return out;
}

}  // namespace stlogic
