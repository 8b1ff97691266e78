#include "provcalc/engine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "provcalc/congruence.hpp"
#include "provcalc/syntax.hpp"

namespace provcalc {

const char* ruleName(Rule r) {
  switch (r) {
    case Rule::Interact: return "interact";
    case Rule::Sequence: return "sequence";
    case Rule::Choice: return "choice";
    case Rule::Exists: return "exists";
  }
  return "?";
}

namespace {

void flattenPar(const Process& p, std::vector<Process>& out) {
  if (const auto* q = as<ParP>(p)) {
    flattenPar(q->left, out);
    flattenPar(q->right, out);
  } else if (!as<UnitP>(p)) {
    out.push_back(p);
  }
}

void flattenSeq(const Process& p, std::vector<Process>& out) {
  if (const auto* s = as<SeqP>(p)) {
    flattenSeq(s->first, out);
    flattenSeq(s->second, out);
  } else if (!as<UnitP>(p)) {
    out.push_back(p);
  }
}

using PositionFn =
    std::function<void(const std::vector<int>&, const Process&)>;

void forEachPosition(const Process& p, std::vector<int>& path,
                     const PositionFn& f) {
  f(path, p);
  auto child = [&](const Process& c, int idx) {
    path.push_back(idx);
    forEachPosition(c, path, f);
    path.pop_back();
  };
  if (const auto* s = as<SeqP>(p)) {
    child(s->first, 0);
    child(s->second, 1);
  } else if (const auto* q = as<ParP>(p)) {
    child(q->left, 0);
    child(q->right, 1);
  } else if (const auto* c = as<ChoiceP>(p)) {
    child(c->left, 0);
    child(c->right, 1);
  } else if (const auto* e = as<ExistsP>(p)) {
    child(e->body, 0);
  }
}

const Label* groundLiteral(const Process& p) {
  const auto* l = as<LiteralP>(p);
  if (l && l->label.tuple.ground()) return &l->label;
  return nullptr;
}

// Seq-splits of one group of parallel components, as (before, after) pairs;
// a chain of length k yields its k-1 cuts plus the two unit paddings.
std::vector<std::pair<Process, Process>> seqSplits(
    const std::vector<Process>& group) {
  std::vector<std::pair<Process, Process>> out;
  Process whole = group.size() == 1 ? group[0] : parAll(group);
  out.emplace_back(whole, unit());
  out.emplace_back(unit(), whole);
  if (group.size() == 1 && as<SeqP>(group[0])) {
    std::vector<Process> chain;
    flattenSeq(group[0], chain);
    for (std::size_t cut = 1; cut < chain.size(); ++cut) {
      std::vector<Process> before(chain.begin(), chain.begin() + cut);
      std::vector<Process> after(chain.begin() + cut, chain.end());
      out.emplace_back(seqAll(before), seqAll(after));
    }
  }
  return out;
}

}  // namespace

std::vector<Step> stepInteract(const Process& s) {
  std::vector<Step> out;
  std::vector<int> path;
  forEachPosition(s, path, [&](const std::vector<int>& at, const Process& t) {
    if (!as<ParP>(t)) return;
    std::vector<Process> comps;
    flattenPar(t, comps);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Label* li = groundLiteral(comps[i]);
      if (!li || li->polarity == Polarity::Artefact) continue;
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        const Label* lj = groundLiteral(comps[j]);
        if (!lj || lj->polarity == Polarity::Artefact) continue;
        if (li->tuple != lj->tuple) continue;
        bool complementary =
            (li->polarity == Polarity::Stored &&
             lj->polarity == Polarity::Consume) ||
            (li->polarity == Polarity::Consume &&
             lj->polarity == Polarity::Stored);
        if (!complementary) continue;
        std::vector<Process> rest;
        for (std::size_t k = 0; k < comps.size(); ++k) {
          if (k == i)
            rest.push_back(literal(Polarity::Artefact, li->tuple));
          else if (k != j)
            rest.push_back(comps[k]);
        }
        out.push_back(Step{Rule::Interact, at, printTuple(li->tuple),
                           rebuildAt(s, at, parAll(rest)), {}});
      }
    }
  });
  return out;
}

std::vector<Step> stepSequence(const Process& s) {
  std::vector<Step> out;
  std::vector<int> path;
  forEachPosition(s, path, [&](const std::vector<int>& at, const Process& t) {
    if (!as<ParP>(t)) return;
    std::vector<Process> comps;
    flattenPar(t, comps);
    const std::size_t n = comps.size();
    if (n < 2) return;
    if (n > 16)
      throw SizeExceeded("sequence rule over " + std::to_string(n) +
                         " parallel components");
    // unordered 2-partitions: component 0 always stays in the first group
    for (std::uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
      std::vector<Process> g1{comps[0]}, g2;
      for (std::size_t k = 1; k < n; ++k)
        ((mask >> (k - 1)) & 1u ? g1 : g2).push_back(comps[k]);
      for (const auto& [p1, p1p] : seqSplits(g1)) {
        for (const auto& [q1, q1p] : seqSplits(g2)) {
          if (as<UnitP>(p1p) && as<UnitP>(q1p)) continue;  // no-op padding
          if (as<UnitP>(p1) && as<UnitP>(q1)) continue;
          Process local =
              tidyUnits(seq(par(p1, q1), par(p1p, q1p)));
          std::string detail = "P=" + printProcess(p1) +
                               "; P'=" + printProcess(p1p) +
                               "; Q=" + printProcess(q1) +
                               "; Q'=" + printProcess(q1p);
          out.push_back(Step{Rule::Sequence, at, std::move(detail),
                             rebuildAt(s, at, local), {}});
        }
      }
    }
  });
  return out;
}

std::vector<Step> stepChoice(const Process& s) {
  std::vector<Step> out;
  std::vector<int> path;
  forEachPosition(s, path, [&](const std::vector<int>& at, const Process& t) {
    if (const auto* c = as<ChoiceP>(t)) {
      out.push_back(
          Step{Rule::Choice, at, "left", rebuildAt(s, at, c->left), {}});
      out.push_back(
          Step{Rule::Choice, at, "right", rebuildAt(s, at, c->right), {}});
    }
  });
  return out;
}

std::vector<Step> stepExists(const Process& s, const Universe& u) {
  std::vector<Step> out;
  std::vector<int> path;
  forEachPosition(s, path, [&](const std::vector<int>& at, const Process& t) {
    if (const auto* e = as<ExistsP>(t)) {
      for (const Name& a : u.names)
        out.push_back(Step{Rule::Exists, at, a.text,
                           rebuildAt(s, at, substitute(e->body, e->var, a)),
                           {}});
    }
  });
  return out;
}

std::vector<Step> stepAll(const Process& s, const Universe& u,
                          RuleMask mask) {
  std::vector<Step> all;
  auto absorb = [&all](std::vector<Step> v) {
    std::move(v.begin(), v.end(), std::back_inserter(all));
  };
  if (mask.interact) absorb(stepInteract(s));
  if (mask.sequence) absorb(stepSequence(s));
  if (mask.choice) absorb(stepChoice(s));
  if (mask.exists) absorb(stepExists(s, u));

  const std::string sourceKey = canonicalKey(s);
  std::vector<Step> out;
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i].result = tidyUnits(all[i].result);
    all[i].resultKey = canonicalKey(all[i].result);
    if (all[i].resultKey == sourceKey) continue;  // congruence no-op
    keyed.emplace_back(
        std::string(ruleName(all[i].rule)) + "\x01" + all[i].resultKey, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::string last;
  for (const auto& [key, idx] : keyed) {
    if (key == last) continue;
    last = key;
    out.push_back(std::move(all[idx]));
  }
  return out;
}

bool isQuiescent(const Process& s) {
  Process t = tidyUnits(s);
  std::function<bool(const Process&)> ok = [&](const Process& p) -> bool {
    if (as<UnitP>(p)) return true;
    if (const auto* l = as<LiteralP>(p))
      return l->label.polarity != Polarity::Consume && l->label.tuple.ground();
    if (const auto* q = as<SeqP>(p)) return ok(q->first) && ok(q->second);
    if (const auto* q = as<ParP>(p)) return ok(q->left) && ok(q->right);
    return false;  // choice or quantifier remains
  };
  return ok(t);
}

namespace {

struct SearchNode {
  Process state;
  std::size_t depth = 0;
  std::string parentKey;
  std::optional<Step> arriving;
};

Trace traceTo(const std::unordered_map<std::string, SearchNode>& nodes,
              const Process& initial, const std::string& key) {
  std::vector<Step> steps;
  std::string cur = key;
  while (true) {
    const SearchNode& n = nodes.at(cur);
    if (!n.arriving) break;
    steps.push_back(*n.arriving);
    cur = n.parentKey;
  }
  std::reverse(steps.begin(), steps.end());
  return Trace{initial, std::move(steps)};
}

RunResult runExhaustive(const Process& start, const Universe& u,
                        const Bounds& bounds) {
  RunResult result;
  result.universe = u;
  std::unordered_map<std::string, SearchNode> nodes;
  std::deque<std::string> queue;
  Process init = tidyUnits(start);
  std::string initKey = canonicalKey(init);
  nodes.emplace(initKey, SearchNode{init, 0, {}, std::nullopt});
  queue.push_back(initKey);

  while (!queue.empty()) {
    std::string key = queue.front();
    queue.pop_front();
    const SearchNode node = nodes.at(key);  // copy: emplace below rehashes
    ++result.statesExplored;

    if (isQuiescent(node.state)) {
      result.terminals.push_back(
          Terminal{node.state, true, traceTo(nodes, init, key)});
      continue;
    }
    std::vector<Step> steps = stepAll(node.state, u);
    if (steps.empty()) {
      result.terminals.push_back(
          Terminal{node.state, false, traceTo(nodes, init, key)});
      continue;
    }
    if (node.depth >= bounds.maxDepth) {
      result.boundExceeded = true;
      continue;
    }
    for (Step& st : steps) {
      const std::string& childKey = st.resultKey;
      if (nodes.count(childKey)) continue;
      if (nodes.size() >= bounds.maxStates) {
        result.boundExceeded = true;
        break;
      }
      nodes.emplace(childKey,
                    SearchNode{st.result, node.depth + 1, key, st});
      queue.push_back(childKey);
    }
  }
  std::sort(result.terminals.begin(), result.terminals.end(),
            [](const Terminal& a, const Terminal& b) {
              return canonicalKey(a.state) < canonicalKey(b.state);
            });
  return result;
}

bool hasInteractStep(const Process& s) { return !stepInteract(s).empty(); }

RunResult runEager(const Process& start, const Universe& u,
                   const Bounds& bounds) {
  RunResult result;
  result.universe = u;
  Process init = tidyUnits(start);
  std::string initKey = canonicalKey(init);
  std::unordered_map<std::string, SearchNode> nodes;
  nodes.emplace(initKey, SearchNode{init, 0, {}, std::nullopt});

  // priorities: instantiations enabling an interact, interacts, sequences,
  // remaining instantiations; lexicographic key breaks ties
  auto prioritised = [&u](const Process& state) {
    std::vector<Step> steps = stepAll(state, u);
    std::vector<std::pair<std::string, Step>> ranked;
    for (Step& st : steps) {
      int cls;
      switch (st.rule) {
        case Rule::Choice:
        case Rule::Exists:
          cls = hasInteractStep(st.result) ? 0 : 3;
          break;
        case Rule::Interact: cls = 1; break;
        case Rule::Sequence: cls = 2; break;
        default: cls = 3;
      }
      ranked.emplace_back(std::to_string(cls) + st.resultKey, std::move(st));
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Step> out;
    out.reserve(ranked.size());
    for (auto& [k, st] : ranked) out.push_back(std::move(st));
    return out;
  };

  std::vector<std::string> stack{initKey};
  while (!stack.empty()) {
    std::string key = stack.back();
    stack.pop_back();
    const SearchNode node = nodes.at(key);
    ++result.statesExplored;

    if (isQuiescent(node.state)) {
      result.terminals.push_back(
          Terminal{node.state, true, traceTo(nodes, init, key)});
      return result;  // first quiescent terminal wins
    }
    std::vector<Step> steps = prioritised(node.state);
    if (steps.empty()) {
      result.terminals.push_back(
          Terminal{node.state, false, traceTo(nodes, init, key)});
      continue;
    }
    if (node.depth >= bounds.maxDepth) {
      result.boundExceeded = true;
      continue;
    }
    // depth-first: push in reverse priority so the best is popped first
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      const std::string& childKey = it->resultKey;
      if (nodes.count(childKey)) continue;
      if (nodes.size() >= bounds.maxStates) {
        result.boundExceeded = true;
        break;
      }
      nodes.emplace(childKey,
                    SearchNode{it->result, node.depth + 1, key, *it});
      stack.push_back(childKey);
    }
  }
  return result;
}

}  // namespace

RunResult run(const Process& s, Strategy strategy, const Bounds& bounds,
              const std::vector<Name>& universeExtras) {
  std::vector<Name> names(groundNames(s).begin(), groundNames(s).end());
  names.insert(names.end(), universeExtras.begin(), universeExtras.end());
  Universe u = Universe::of(std::move(names));
  return strategy == Strategy::Exhaustive ? runExhaustive(s, u, bounds)
                                          : runEager(s, u, bounds);
}

YieldsResult yields(const Process& p, const Process& q, const Bounds& bounds,
                    const std::vector<Name>& universeExtras, RuleMask mask) {
  YieldsResult result;
  std::vector<Name> names;
  for (const Name& n : groundNames(p)) names.push_back(n);
  for (const Name& n : groundNames(q)) names.push_back(n);
  names.insert(names.end(), universeExtras.begin(), universeExtras.end());
  Universe u = Universe::of(std::move(names));

  Process init = tidyUnits(q);
  const std::string target = canonicalKey(p);
  std::string initKey = canonicalKey(init);
  std::unordered_map<std::string, SearchNode> nodes;
  nodes.emplace(initKey, SearchNode{init, 0, {}, std::nullopt});
  if (initKey == target) {
    result.status = YieldsStatus::Found;
    result.trace = Trace{init, {}};
    return result;
  }
  std::deque<std::string> queue{initKey};
  bool bounded = false;
  while (!queue.empty()) {
    std::string key = queue.front();
    queue.pop_front();
    const SearchNode node = nodes.at(key);  // copy: emplace below rehashes
    ++result.statesExplored;
    if (node.depth >= bounds.maxDepth) {
      bounded = true;
      continue;
    }
    for (Step& st : stepAll(node.state, u, mask)) {
      const std::string& childKey = st.resultKey;
      if (nodes.count(childKey)) continue;
      if (nodes.size() >= bounds.maxStates) {
        bounded = true;
        break;
      }
      nodes.emplace(childKey, SearchNode{st.result, node.depth + 1, key, st});
      if (childKey == target) {
        result.status = YieldsStatus::Found;
        result.trace = traceTo(nodes, init, childKey);
        return result;
      }
      queue.push_back(childKey);
    }
  }
  result.status = bounded ? YieldsStatus::BoundExceeded : YieldsStatus::Absent;
  return result;
}

}  // namespace provcalc
