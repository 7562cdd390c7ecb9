// Propositional language: atoms, the constant bot, and the connectives
// & | ->.  Negation is sugar only: ~A is stored as A -> bot and re-sugared
// by the printer.  Formulas are immutable and cheap to copy.
#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace stlogic {

enum class FormulaKind : unsigned char { Atom, Bottom, And, Or, Implies };

class Formula {
 public:
  static Formula atom(std::string name) {
    if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
    std::size_t h = combine(1, std::hash<std::string>{}(name));
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Atom, std::move(name), nullptr, nullptr, h, 0}));
  }

  static Formula bottom() {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Bottom, {}, nullptr, nullptr, 2, 0}));
  }

  static Formula conj(Formula l, Formula r) { return binary(FormulaKind::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return binary(FormulaKind::Or, std::move(l), std::move(r)); }
  static Formula implies(Formula l, Formula r) { return binary(FormulaKind::Implies, std::move(l), std::move(r)); }

  /// ~A as A -> bot.  There is no negation node.
  static Formula negate(Formula f) { return implies(std::move(f), bottom()); }

  FormulaKind kind() const { return node_->kind; }

  const std::string& atom_name() const {
    require(kind() == FormulaKind::Atom, "atom_name on non-atom");
    return node_->atom;
  }

  Formula left() const {
    require(is_binary(), "left on leaf formula");
    return Formula(node_->lhs);
  }

  Formula right() const {
    require(is_binary(), "right on leaf formula");
    return Formula(node_->rhs);
  }

  bool is_binary() const { return node_->lhs != nullptr; }

  /// True for Implies(X, bot), the re-sugared form of ~X.
  bool is_negation() const {
    return kind() == FormulaKind::Implies && node_->rhs->kind == FormulaKind::Bottom;
  }

  /// Nesting depth; leaves (atoms, bot) have depth 0.
  int depth() const { return node_->depth; }

  std::size_t hash() const { return node_->hash; }

  bool operator==(const Formula& other) const {
    return equal_nodes(node_.get(), other.node_.get());
  }
  bool operator!=(const Formula& other) const { return !(*this == other); }

  /// Minimal-parenthesization text; parse(to_string(f)) == f structurally.
  std::string to_string() const {
    std::string out;
    print(node_.get(), PrecImplies, out);
    return out;
  }

  /// Names of atoms occurring in the formula.  bot is not an atom.
  std::set<std::string> atoms() const {
    std::set<std::string> out;
    collect_atoms(node_.get(), out);
    return out;
  }

  /// All distinct subtrees, children before parents.
  std::vector<Formula> subformulas() const {
    std::vector<Formula> order;
    std::unordered_set<Formula, Hash> seen;
    collect_subformulas(*this, seen, order);
    return order;
  }

  struct Hash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
  };

 private:
  struct Node {
    FormulaKind kind;
    std::string atom;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t hash;
    int depth;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula binary(FormulaKind k, Formula l, Formula r) {
    std::size_t h = combine(combine(static_cast<std::size_t>(k) + 0x11, l.hash()), r.hash());
    int d = 1 + std::max(l.depth(), r.depth());
    return Formula(std::make_shared<const Node>(
        Node{k, {}, std::move(l.node_), std::move(r.node_), h, d}));
  }

  static std::size_t combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  }

  static void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(what);
  }

  static bool equal_nodes(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->hash != b->hash) return false;
    if (a->kind == FormulaKind::Atom) return a->atom == b->atom;
    if (a->lhs == nullptr) return true;  // Bottom
    return equal_nodes(a->lhs.get(), b->lhs.get()) && equal_nodes(a->rhs.get(), b->rhs.get());
  }

  // Precedence levels used by both printer and parser:
  // ~ binds tightest, then &, then |, then -> (right-associative).
  static constexpr int PrecImplies = 1;
  static constexpr int PrecOr = 2;
  static constexpr int PrecAnd = 3;
  static constexpr int PrecNeg = 4;
  static constexpr int PrecLeaf = 5;

  static int precedence(const Node* n) {
    switch (n->kind) {
      case FormulaKind::Atom:
      case FormulaKind::Bottom:
        return PrecLeaf;
      case FormulaKind::And:
        return PrecAnd;
      case FormulaKind::Or:
        return PrecOr;
      case FormulaKind::Implies:
        return n->rhs->kind == FormulaKind::Bottom ? PrecNeg : PrecImplies;
    }
    return PrecLeaf;
  }

  static void print(const Node* n, int min_prec, std::string& out) {
    const bool parens = precedence(n) < min_prec;
    if (parens) out += '(';
    switch (n->kind) {
      case FormulaKind::Atom:
        out += n->atom;
        break;
      case FormulaKind::Bottom:
        out += "bot";
        break;
      case FormulaKind::And:
        print(n->lhs.get(), PrecAnd, out);
        out += " & ";
        print(n->rhs.get(), PrecAnd + 1, out);
        break;
      case FormulaKind::Or:
        print(n->lhs.get(), PrecOr, out);
        out += " | ";
        print(n->rhs.get(), PrecOr + 1, out);
        break;
      case FormulaKind::Implies:
        if (n->rhs->kind == FormulaKind::Bottom) {
          out += '~';
          print(n->lhs.get(), PrecNeg, out);
        } else {
          print(n->lhs.get(), PrecImplies + 1, out);
          out += " -> ";
          print(n->rhs.get(), PrecImplies, out);
        }
        break;
    }
    if (parens) out += ')';
  }

  static void collect_atoms(const Node* n, std::set<std::string>& out) {
    if (n->kind == FormulaKind::Atom) {
      out.insert(n->atom);
    } else if (n->lhs != nullptr) {
      collect_atoms(n->lhs.get(), out);
      collect_atoms(n->rhs.get(), out);
    }
  }

  static void collect_subformulas(const Formula& f, std::unordered_set<Formula, Hash>& seen,
                                  std::vector<Formula>& order) {
    if (seen.count(f) != 0) return;
    if (f.is_binary()) {
      collect_subformulas(f.left(), seen, order);
      collect_subformulas(f.right(), seen, order);
    }
    if (seen.insert(f).second) order.push_back(f);
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace stlogic
