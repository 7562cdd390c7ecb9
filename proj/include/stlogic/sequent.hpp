// Sequent shapes: an Inference is a pair of finite formula lists, a
// Metainference takes a list of inferences to a single inference.
// Duplicates and order inside the lists are semantically irrelevant.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "stlogic/formula.hpp"

namespace stlogic {

struct Inference {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;

  bool operator==(const Inference& o) const {
    return antecedent == o.antecedent && succedent == o.succedent;
  }

  std::string to_string() const {
    std::string out = join(antecedent);
    out += out.empty() ? "=>" : " =>";
    std::string rhs = join(succedent);
    if (!rhs.empty()) out += " " + rhs;
    return out;
  }

 private:
  static std::string join(const std::vector<Formula>& fs) {
    std::string out;
    for (const Formula& f : fs) {
      if (!out.empty()) out += ", ";
      out += f.to_string();
    }
    return out;
  }
};

struct Metainference {
  std::vector<Inference> premises;
  Inference conclusion;

  bool operator==(const Metainference& o) const {
    return premises == o.premises && conclusion == o.conclusion;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < premises.size(); ++i) {
      out += i == 0 ? " " : " ; ";
      out += premises[i].to_string();
    }
    out += premises.empty() ? "]" : " ]";
    out += " =>* [ " + conclusion.to_string() + " ]";
    return out;
  }
};

/// Replaces a nonempty succedent by the single right-nested disjunction of
/// its members; the antecedent is untouched.  Satisfaction is preserved in
/// every interpretation kind.
inline Inference reduce_succedent(const Inference& inf) {
  if (inf.succedent.empty())
    throw std::invalid_argument("reduce_succedent requires a nonempty succedent");
  Formula disjunction = inf.succedent.back();
  for (std::size_t i = inf.succedent.size() - 1; i-- > 0;)
    disjunction = Formula::disj(inf.succedent[i], std::move(disjunction));
  return Inference{inf.antecedent, {std::move(disjunction)}};
}

inline std::set<std::string> atoms_of(const Inference& inf) {
  std::set<std::string> out;
  for (const Formula& f : inf.antecedent) out.merge(f.atoms());
  for (const Formula& f : inf.succedent) out.merge(f.atoms());
  return out;
}

inline std::set<std::string> atoms_of(const Metainference& meta) {
  std::set<std::string> out = atoms_of(meta.conclusion);
  for (const Inference& p : meta.premises) out.merge(atoms_of(p));
  return out;
}

}  // namespace stlogic
