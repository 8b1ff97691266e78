#ifndef PROVCALC_ENGINE_HPP
#define PROVCALC_ENGINE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "provcalc/denotation.hpp"
#include "provcalc/terms.hpp"

namespace provcalc {

enum class Rule { Interact, Sequence, Choice, Exists };

const char* ruleName(Rule r);

/// One backward application of a deduction rule: the conclusion instance at
/// `path` is replaced by the matching premise, giving `result`.
struct Step {
  Rule rule;
  std::vector<int> path;
  std::string detail;
  Process result;
  std::string resultKey;  // cached canonicalKey(result)
};

struct Trace {
  Process initial;
  std::vector<Step> steps;
};

struct Bounds {
  std::size_t maxStates = 10000;
  std::size_t maxDepth = 64;
};

enum class Strategy { Exhaustive, Eager };

struct RuleMask {
  bool interact = true;
  bool sequence = true;
  bool choice = true;
  bool exists = true;
};

/// Parallel stored/consume siblings with the same ground tuple collapse to
/// an artefact.
std::vector<Step> stepInteract(const Process& s);

/// Every decomposition of a parallel subterm as (P;P')|(Q;Q') rewrites to
/// (P|Q);(P'|Q'); unit padding bounded to one unit per slot.
std::vector<Step> stepSequence(const Process& s);

std::vector<Step> stepChoice(const Process& s);

std::vector<Step> stepExists(const Process& s, const Universe& u);

/// All rules, deduplicated by (rule, canonicalKey of result); steps whose
/// result is congruent to the source are dropped.
std::vector<Step> stepAll(const Process& s, const Universe& u,
                          RuleMask mask = {});

/// Only stored data and artefacts remain, and the term is ground.
bool isQuiescent(const Process& s);

struct Terminal {
  Process state;
  bool quiescent = false;
  Trace trace;
};

struct RunResult {
  std::vector<Terminal> terminals;
  bool boundExceeded = false;
  std::size_t statesExplored = 0;
  Universe universe;
};

/// Executes a system. Exhaustive: breadth-first over congruence classes,
/// collecting every terminal; quiescent states are absorbing. Eager:
/// prioritised depth-first search (instantiations that enable an interact,
/// then interacts, then sequences) returning the first quiescent terminal.
RunResult run(const Process& s, Strategy strategy, const Bounds& bounds,
              const std::vector<Name>& universeExtras = {});

enum class YieldsStatus { Found, Absent, BoundExceeded };

struct YieldsResult {
  YieldsStatus status = YieldsStatus::Absent;
  std::optional<Trace> trace;
  std::size_t statesExplored = 0;
};

/// Searches from q for a state congruent to p; a found trace certifies that
/// p proves q, i.e. q can evolve to p.
YieldsResult yields(const Process& p, const Process& q, const Bounds& bounds,
                    const std::vector<Name>& universeExtras = {},
                    RuleMask mask = {});

}  // namespace provcalc

#endif
