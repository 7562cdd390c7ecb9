#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "stlogic/formula.hpp"
#include "stlogic/generators.hpp"
#include "stlogic/parse.hpp"

using namespace stlogic;

namespace {
const Formula a = Formula::atom("a");
const Formula b = Formula::atom("b");
const Formula c = Formula::atom("c");
}  // namespace

TEST_CASE("negation desugars to implication into bot") {
  const Formula f = parse_formula("~a -> (a -> b)");
  REQUIRE(f == Formula::implies(Formula::implies(a, Formula::bottom()),
                                Formula::implies(a, b)));
  REQUIRE(f.left().is_negation());
  REQUIRE(f.left() == Formula::negate(a));
}

TEST_CASE("precedence and associativity") {
  REQUIRE(parse_formula("a & b | c") == Formula::disj(Formula::conj(a, b), c));
  REQUIRE(parse_formula("a -> b -> c") == Formula::implies(a, Formula::implies(b, c)));
  REQUIRE(parse_formula("a | b & c") == Formula::disj(a, Formula::conj(b, c)));
  REQUIRE(parse_formula("~a & b") == Formula::conj(Formula::negate(a), b));
  REQUIRE(parse_formula("a & b & c") == Formula::conj(Formula::conj(a, b), c));
  REQUIRE(parse_formula("~~bot") == Formula::negate(Formula::negate(Formula::bottom())));
}

TEST_CASE("parse errors carry positions") {
  REQUIRE_THROWS_AS(parse_formula(""), ParseError);
  REQUIRE_THROWS_AS(parse_formula("   "), ParseError);
  REQUIRE_THROWS_AS(parse_formula("a &"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("a - b"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("(a -> b"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("a b"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("A -> b"), ParseError);
  bool threw = false;
  try {
    parse_formula("a -> ->");
  } catch (const ParseError& e) {
    threw = true;
    REQUIRE(e.position() == 5);
  }
  REQUIRE(threw);
}

TEST_CASE("printing uses minimal parentheses and re-sugars negation") {
  REQUIRE(parse_formula("~a -> (a -> b)").to_string() == "~a -> a -> b");
  REQUIRE(Formula::bottom().to_string() == "bot");
  REQUIRE(Formula::conj(a, Formula::disj(b, c)).to_string() == "a & (b | c)");
  REQUIRE(Formula::negate(Formula::conj(a, b)).to_string() == "~(a & b)");
  REQUIRE(Formula::conj(a, Formula::conj(b, c)).to_string() == "a & (b & c)");
  REQUIRE(Formula::implies(Formula::implies(a, b), c).to_string() == "(a -> b) -> c");
  REQUIRE(Formula::negate(Formula::negate(a)).to_string() == "~~a");
  // a -> bot prints as ~a even when written the long way.
  REQUIRE(parse_formula("a -> bot").to_string() == "~a");
}

TEST_CASE("atoms") {
  REQUIRE(Formula::implies(a, b).atoms() == std::set<std::string>{"a", "b"});
  REQUIRE(Formula::bottom().atoms().empty());
  REQUIRE(Formula::conj(a, a).atoms() == std::set<std::string>{"a"});
  REQUIRE(parse_formula("~x1 | bot").atoms() == std::set<std::string>{"x1"});
}

TEST_CASE("subformulas are children-first and deduplicated") {
  const Formula f = Formula::implies(a, b);
  const std::vector<Formula> subs = f.subformulas();
  REQUIRE(subs == std::vector<Formula>{a, b, f});

  REQUIRE(a.subformulas() == std::vector<Formula>{a});

  const Formula g = Formula::conj(a, Formula::conj(a, b));
  const std::vector<Formula> gsubs = g.subformulas();
  REQUIRE(gsubs == std::vector<Formula>{a, b, Formula::conj(a, b), g});

  // Children always appear before their parents.
  for (std::size_t i = 0; i < gsubs.size(); ++i) {
    if (!gsubs[i].is_binary()) continue;
    bool left_seen = false, right_seen = false;
    for (std::size_t j = 0; j < i; ++j) {
      left_seen |= gsubs[j] == gsubs[i].left();
      right_seen |= gsubs[j] == gsubs[i].right();
    }
    REQUIRE(left_seen);
    REQUIRE(right_seen);
  }
}

TEST_CASE("round-trip: parse(print(f)) == f for sampled formulas") {
  FormulaSampler sampler(20240901);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = sampler.next();
    const std::string text = f.to_string();
    INFO(text);
    REQUIRE(parse_formula(text) == f);
  }
}

TEST_CASE("subformula count is bounded by node count") {
  FormulaSampler sampler(7);
  for (int i = 0; i < 200; ++i) {
    const Formula f = sampler.next();
    const auto subs = f.subformulas();
    std::unordered_set<Formula, Formula::Hash> unique(subs.begin(), subs.end());
    REQUIRE(unique.size() == subs.size());
    REQUIRE(f == subs.back());
  }
}

TEST_CASE("sequent parsing and printing") {
  const Inference inf = parse_inference("a, a -> b => b, c");
  REQUIRE(inf.antecedent.size() == 2);
  REQUIRE(inf.succedent.size() == 2);
  REQUIRE(inf.to_string() == "a, a -> b => b, c");

  REQUIRE(parse_inference("=>").antecedent.empty());
  REQUIRE(parse_inference("=>").succedent.empty());
  REQUIRE(parse_inference("a =>").succedent.empty());
  REQUIRE(parse_inference("=> a").antecedent.empty());
  REQUIRE_THROWS_AS(parse_inference("a, b"), ParseError);
  REQUIRE_THROWS_AS(parse_inference("a => b => c"), ParseError);

  const Metainference meta = parse_metainference("[ => a ; => b ] =>* [ => a & b ]");
  REQUIRE(meta.premises.size() == 2);
  REQUIRE(meta.to_string() == "[ => a ; => b ] =>* [ => a & b ]");

  const Metainference empty = parse_metainference("[] =>* [ a => b ]");
  REQUIRE(empty.premises.empty());
  REQUIRE(empty.to_string() == "[] =>* [ a => b ]");
  REQUIRE_THROWS_AS(parse_metainference("[ => a ] => [ => b ]"), ParseError);
}

TEST_CASE("succedent reduction builds a right-nested disjunction") {
  const Inference inf = parse_inference("x => a, b, c");
  const Inference reduced = reduce_succedent(inf);
  REQUIRE(reduced.antecedent == inf.antecedent);
  REQUIRE(reduced.succedent.size() == 1);
  REQUIRE(reduced.succedent.front() == Formula::disj(a, Formula::disj(b, c)));

  const Inference single = parse_inference("=> a");
  REQUIRE(reduce_succedent(single) == single);

  REQUIRE_THROWS_AS(reduce_succedent(parse_inference("a =>")), std::invalid_argument);
}
