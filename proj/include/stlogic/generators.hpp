// Seeded random formula and inference sources for the property batteries.
// All draws go through mt19937_64 with hand-rolled bounding, so a seed fixes
// the sampled objects across runs and platforms.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stlogic/formula.hpp"
#include "stlogic/sequent.hpp"

namespace stlogic {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct SamplerParams {
  int max_depth = 4;
  int atom_count = 3;  // draws from a, b, c, ...
};

class FormulaSampler {
 public:
  FormulaSampler(std::uint64_t seed, SamplerParams params = {})
      : rng_(seed), params_(params) {
    for (int i = 0; i < params_.atom_count; ++i)
      pool_.push_back(std::string(1, static_cast<char>('a' + i % 26)));
  }

  Formula next() { return sample(params_.max_depth); }

  Rng& rng() { return rng_; }

 private:
  Formula sample(int depth) {
    if (depth == 0) return leaf();
    switch (rng_.below(6)) {
      case 0: return leaf();
      case 1: return Formula::conj(sample(depth - 1), sample(depth - 1));
      case 2: return Formula::disj(sample(depth - 1), sample(depth - 1));
      case 3:
      case 4: return Formula::implies(sample(depth - 1), sample(depth - 1));
      default: return Formula::negate(sample(depth - 1));
    }
  }

  Formula leaf() {
    const int pick = rng_.below(static_cast<int>(pool_.size()) + 1);
    if (pick == static_cast<int>(pool_.size())) return Formula::bottom();
    return Formula::atom(pool_[pick]);
  }

  Rng rng_;
  SamplerParams params_;
  std::vector<std::string> pool_;
};

struct InferenceSamplerParams {
  SamplerParams formula{};
  int max_antecedent = 2;
  int min_succedent = 1;
  int max_succedent = 1;
};

class InferenceSampler {
 public:
  explicit InferenceSampler(std::uint64_t seed, InferenceSamplerParams params = {})
      : formulas_(seed, params.formula), params_(params) {}

  Inference next() {
    Inference inf;
    const int lhs = formulas_.rng().below(params_.max_antecedent + 1);
    for (int i = 0; i < lhs; ++i) inf.antecedent.push_back(formulas_.next());
    const int span = params_.max_succedent - params_.min_succedent + 1;
    const int rhs = params_.min_succedent + formulas_.rng().below(span);
    for (int i = 0; i < rhs; ++i) inf.succedent.push_back(formulas_.next());
    return inf;
  }

 private:
  FormulaSampler formulas_;
  InferenceSamplerParams params_;
};

}  // namespace stlogic
