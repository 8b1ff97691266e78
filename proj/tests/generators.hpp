#ifndef PROVCALC_TESTS_GENERATORS_HPP
#define PROVCALC_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "provcalc/terms.hpp"

namespace provcalc::testgen {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int below(int n) {
    return static_cast<int>(
        std::uniform_int_distribution<int>(0, n - 1)(eng));
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(eng) < p;
  }
};

inline std::vector<Name> smallPool() {
  return {Name{"a"}, Name{"b"}, Name{"c"}, Name{"d"}, Name{"e"}};
}

inline TupleTerm groundTuple(Rng& rng, const std::vector<Name>& pool) {
  int arity = 1 + rng.below(3);
  std::vector<Atom> atoms;
  for (int i = 0; i < arity; ++i)
    atoms.emplace_back(pool[rng.below(static_cast<int>(pool.size()))]);
  return TupleTerm{std::move(atoms)};
}

inline TupleTerm tupleWithVars(Rng& rng, const std::vector<Name>& pool,
                               const std::vector<Variable>& scope) {
  int arity = 1 + rng.below(3);
  std::vector<Atom> atoms;
  for (int i = 0; i < arity; ++i) {
    if (!scope.empty() && rng.chance(0.4))
      atoms.emplace_back(scope[rng.below(static_cast<int>(scope.size()))]);
    else
      atoms.emplace_back(pool[rng.below(static_cast<int>(pool.size()))]);
  }
  return TupleTerm{std::move(atoms)};
}

/// Ground series-parallel term with exactly `literals` literals (0 gives 1).
inline Process genSpTerm(Rng& rng, int literals,
                         const std::vector<Name>& pool) {
  if (literals <= 0) return unit();
  if (literals == 1) {
    Polarity pol = std::array{Polarity::Consume, Polarity::Stored,
                              Polarity::Artefact}[rng.below(3)];
    return literal(pol, groundTuple(rng, pool));
  }
  int left = 1 + rng.below(literals - 1);
  Process a = genSpTerm(rng, left, pool);
  Process b = genSpTerm(rng, literals - left, pool);
  return rng.chance(0.5) ? seq(a, b) : par(a, b);
}

/// Closed process term over the full grammar; binders come from a budget.
inline Process genClosedTerm(Rng& rng, int literals, int& binderBudget,
                             const std::vector<Name>& pool,
                             std::vector<Variable>& scope) {
  if (literals <= 0) return unit();
  if (binderBudget > 0 && rng.chance(0.25)) {
    --binderBudget;
    Variable x{"v" + std::to_string(binderBudget)};
    scope.push_back(x);
    Process body = genClosedTerm(rng, literals, binderBudget, pool, scope);
    scope.pop_back();
    return exists(x, body);
  }
  if (literals == 1) {
    Polarity pol = std::array{Polarity::Consume, Polarity::Stored,
                              Polarity::Artefact}[rng.below(3)];
    return literal(pol, tupleWithVars(rng, pool, scope));
  }
  int left = 1 + rng.below(literals - 1);
  Process a = genClosedTerm(rng, left, binderBudget, pool, scope);
  Process b = genClosedTerm(rng, literals - left, binderBudget, pool, scope);
  switch (rng.below(3)) {
    case 0: return seq(a, b);
    case 1: return par(a, b);
    default: return choice(a, b);
  }
}

inline Process genClosedTerm(Rng& rng, int literals, int binders,
                             const std::vector<Name>& pool) {
  std::vector<Variable> scope;
  int budget = binders;
  return genClosedTerm(rng, literals, budget, pool, scope);
}

// --- §-style system generator: stored data composed with updates ---

inline Process genQuery(Rng& rng, int literals, const std::vector<Name>& pool,
                        std::vector<Variable>& scope, int& binderBudget) {
  if (literals <= 0) return unit();
  if (binderBudget > 0 && rng.chance(0.3)) {
    --binderBudget;
    Variable x{"q" + std::to_string(binderBudget)};
    scope.push_back(x);
    Process body = genQuery(rng, literals, pool, scope, binderBudget);
    scope.pop_back();
    return exists(x, body);
  }
  if (literals == 1)
    return literal(Polarity::Consume, tupleWithVars(rng, pool, scope));
  int left = 1 + rng.below(literals - 1);
  Process a = genQuery(rng, left, pool, scope, binderBudget);
  Process b = genQuery(rng, literals - left, pool, scope, binderBudget);
  return rng.chance(0.5) ? par(a, b) : choice(a, b);
}

inline Process genData(Rng& rng, int literals, const std::vector<Name>& pool,
                       std::vector<Variable>& scope) {
  if (literals <= 0) return unit();
  if (literals == 1)
    return literal(Polarity::Stored, tupleWithVars(rng, pool, scope));
  int left = 1 + rng.below(literals - 1);
  return par(genData(rng, left, pool, scope),
             genData(rng, literals - left, pool, scope));
}

inline Process genUpdate(Rng& rng, int literals, const std::vector<Name>& pool,
                         int& binderBudget) {
  std::vector<Variable> scope;
  if (binderBudget > 0 && rng.chance(0.6)) {
    --binderBudget;
    Variable x{"u" + std::to_string(binderBudget)};
    scope.push_back(x);
    int ql = 1 + rng.below(std::max(1, literals - 1));
    Process q = genQuery(rng, ql, pool, scope, binderBudget);
    Process d = genData(rng, literals - ql, pool, scope);
    scope.pop_back();
    return exists(x, seq(q, d));
  }
  int ql = 1 + rng.below(std::max(1, literals - 1));
  Process q = genQuery(rng, ql, pool, scope, binderBudget);
  Process d = genData(rng, literals - ql, pool, scope);
  return seq(q, d);
}

/// System term: stored data in parallel with updates and artefacts.
inline Process genSystemTerm(Rng& rng, int maxLiterals, int maxBinders,
                             const std::vector<Name>& pool) {
  int literals = 1 + rng.below(maxLiterals);
  int binderBudget = rng.below(maxBinders + 1);
  std::vector<Process> parts;
  std::vector<Variable> noScope;
  while (literals > 0) {
    int take = 1 + rng.below(std::min(literals, 4));
    literals -= take;
    switch (rng.below(4)) {
      case 0:
        parts.push_back(genData(rng, take, pool, noScope));
        break;
      case 1:
        parts.push_back(
            literal(Polarity::Artefact, groundTuple(rng, pool)));
        break;
      default:
        parts.push_back(genUpdate(rng, take, pool, binderBudget));
    }
  }
  if (parts.empty()) return unit();
  if (parts.size() > 1 && rng.chance(0.3)) {
    Process tail = parts.back();
    parts.pop_back();
    return seq(parAll(parts), tail);
  }
  return parAll(parts);
}

}  // namespace provcalc::testgen

#endif
