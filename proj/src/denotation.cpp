#include "provcalc/denotation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace provcalc {

Universe Universe::of(std::vector<Name> ns) {
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return Universe{std::move(ns)};
}

LabelledDag termToDag(const Process& spTerm, const Valuation& v) {
  if (as<UnitP>(spTerm)) return LabelledDag::empty();
  if (const auto* l = as<LiteralP>(spTerm)) {
    std::vector<std::string> names;
    names.reserve(l->label.tuple.atoms.size());
    for (const Atom& a : l->label.tuple.atoms) {
      if (const auto* n = std::get_if<Name>(&a))
        names.push_back(n->text);
      else
        names.push_back(v(std::get<Variable>(a)).text);
    }
    return LabelledDag::singleton(
        DagLabel{l->label.polarity, std::move(names)});
  }
  if (const auto* s = as<SeqP>(spTerm))
    return seqCompose(termToDag(s->first, v), termToDag(s->second, v));
  if (const auto* q = as<ParP>(spTerm))
    return parCompose(termToDag(q->left, v), termToDag(q->right, v));
  throw std::invalid_argument(
      "termToDag: term contains choice or a quantifier");
}

IdealRep denote(const Process& p, const Valuation& v, HomKind kind,
                const Universe& u) {
  IdealRep rep;
  rep.kind = kind;
  std::unordered_set<std::string> seen;
  for (const Summand& s : sumOfSeriesParallel(p)) {
    const std::size_t k = s.binders.size();
    if (k > 0 && u.empty()) throw EmptyUniverse{};
    std::vector<std::size_t> odo(k, 0);
    for (;;) {
      Valuation vv = v;
      for (std::size_t i = 0; i < k; ++i)
        vv = vv.extended(s.binders[i], u.names[odo[i]]);
      LabelledDag d = termToDag(s.body, vv);
      std::string key = canonicalDag(d, 64).key;
      if (seen.insert(key).second) {
        rep.generators.push_back(std::move(d));
        rep.keys.push_back(std::move(key));
      }
      // odometer over U^k
      std::size_t i = 0;
      while (i < k && ++odo[i] == u.names.size()) odo[i++] = 0;
      if (i == k) break;
    }
  }
  return rep;
}

namespace {

std::optional<HomWitness> findHom(HomKind kind, const LabelledDag& src,
                                  const LabelledDag& dst) {
  switch (kind) {
    case HomKind::Labelled: return findLabelledHom(src, dst);
    case HomKind::Smoothing: return findSmoothingHom(src, dst);
    case HomKind::Interaction: return findInteractionHom(src, dst);
  }
  return std::nullopt;
}

}  // namespace

bool idealMember(const LabelledDag& d, const IdealRep& ideal) {
  for (const LabelledDag& g : ideal.generators)
    if (findHom(ideal.kind, g, d)) return true;
  return false;
}

bool idealMemberViaChains(const LabelledDag& d, const IdealRep& ideal) {
  const std::string target = canonicalDag(d, 64).key;
  const int targetVertices = d.size();
  const int targetEdges = d.edgeCount();
  for (const LabelledDag& g : ideal.generators) {
    std::unordered_set<std::string> visited;
    std::deque<LabelledDag> frontier;
    frontier.push_back(g);
    visited.insert(canonicalDag(g, 64).key);
    bool found = false;
    while (!frontier.empty() && !found) {
      LabelledDag cur = std::move(frontier.front());
      frontier.pop_front();
      if (canonicalDag(cur, 64).key == target) {
        found = true;
        break;
      }
      if (cur.size() < targetVertices) continue;
      auto push = [&](LabelledDag next) {
        if (next.size() < targetVertices) return;
        if (next.size() == targetVertices && next.edgeCount() > targetEdges)
          return;
        std::string key = canonicalDag(next, 64).key;
        if (visited.insert(key).second) frontier.push_back(std::move(next));
      };
      if (ideal.kind == HomKind::Interaction)
        for (int u = 0; u < cur.size(); ++u)
          for (int w = u + 1; w < cur.size(); ++w)
            if (coherent(cur, u, w)) push(mergeCoherentPair(cur, u, w));
      for (int u = 0; u < cur.size(); ++u)
        for (int w = 0; w < cur.size(); ++w)
          if (u != w && !cur.edge(u, w) && !cur.edge(w, u))
            push(withExtraEdge(cur, u, w));
    }
    if (found) return true;
  }
  return false;
}

bool idealIncluded(const Process& p, const Process& q, HomKind kind,
                   const Universe& u, const Valuation& v) {
  IdealRep ip = denote(p, v, kind, u);
  IdealRep iq = denote(q, v, kind, u);
  for (const LabelledDag& g : ip.generators)
    if (!idealMember(g, iq)) return false;
  return true;
}

int binderCount(const Process& p) {
  if (const auto* s = as<SeqP>(p))
    return binderCount(s->first) + binderCount(s->second);
  if (const auto* q = as<ParP>(p))
    return binderCount(q->left) + binderCount(q->right);
  if (const auto* c = as<ChoiceP>(p))
    return binderCount(c->left) + binderCount(c->right);
  if (const auto* e = as<ExistsP>(p)) return 1 + binderCount(e->body);
  return 0;
}

Universe decisionUniverse(const Process& p, const Process& q,
                          const std::vector<Name>& extras) {
  std::set<Name> names;
  for (const Name& n : groundNames(p)) names.insert(n);
  for (const Name& n : groundNames(q)) names.insert(n);
  for (const Name& n : extras) names.insert(n);
  int k = std::max(binderCount(p), binderCount(q));
  for (int i = 1; k > 0; ++i) {
    Name fresh{"fresh_" + std::to_string(i)};
    if (names.insert(fresh).second) --k;
  }
  return Universe{std::vector<Name>(names.begin(), names.end())};
}

}  // namespace provcalc
