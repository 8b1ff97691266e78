#include "provcalc/provenance.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <json.hpp>

#include "provcalc/denotation.hpp"
#include "provcalc/syntax.hpp"

namespace provcalc {

ProvenanceDiagram extractProvenance(const Process& terminal,
                                    const Valuation& v) {
  Process t = tidyUnits(terminal);
  std::function<void(const Process&)> check = [&](const Process& p) {
    if (as<UnitP>(p)) return;
    if (const auto* l = as<LiteralP>(p)) {
      if (l->label.polarity == Polarity::Consume)
        throw NotQuiescent("consume literal remains: " +
                           printLabel(l->label));
      return;
    }
    if (const auto* s = as<SeqP>(p)) {
      check(s->first);
      check(s->second);
      return;
    }
    if (const auto* q = as<ParP>(p)) {
      check(q->left);
      check(q->right);
      return;
    }
    throw NotQuiescent("choice or quantifier remains");
  };
  check(t);
  ProvenanceDiagram diag;
  diag.dag = termToDag(t, v);
  diag.directEdges = diag.dag.transitiveReduction();
  return diag;
}

bool multiStepDerivedFrom(const ProvenanceDiagram& diag, int u, int w) {
  return diag.dag.edge(u, w);
}

std::string exportDot(const ProvenanceDiagram& diag, DotOptions opts) {
  CanonicalDag canon = canonicalDag(diag.dag, 64);
  std::vector<int> pos(diag.dag.size());
  for (std::size_t i = 0; i < canon.order.size(); ++i)
    pos[canon.order[i]] = static_cast<int>(i);

  std::string out = "digraph provenance {\n";
  for (std::size_t i = 0; i < canon.order.size(); ++i) {
    const DagLabel& l = diag.dag.label(canon.order[i]);
    out += "  n" + std::to_string(i) + " [label=\"" + l.str() + "\" shape=" +
           (l.polarity == Polarity::Artefact ? "box" : "ellipse") + "];\n";
  }
  std::vector<std::pair<int, int>> edges =
      opts.transitive ? diag.dag.edgeList() : diag.directEdges;
  std::vector<std::pair<int, int>> remapped;
  remapped.reserve(edges.size());
  for (auto [u, v] : edges) remapped.emplace_back(pos[u], pos[v]);
  std::sort(remapped.begin(), remapped.end());
  for (auto [u, v] : remapped)
    out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

namespace {

const char* kindOf(Polarity p) {
  switch (p) {
    case Polarity::Consume: return "consume";
    case Polarity::Stored: return "stored";
    case Polarity::Artefact: return "artefact";
  }
  return "?";
}

Polarity polarityOf(const std::string& kind) {
  if (kind == "consume") return Polarity::Consume;
  if (kind == "stored") return Polarity::Stored;
  if (kind == "artefact") return Polarity::Artefact;
  throw NotADag("unknown node kind '" + kind + "'");
}

}  // namespace

std::string exportJson(const ProvenanceDiagram& diag) {
  CanonicalDag canon = canonicalDag(diag.dag, 64);
  std::vector<int> pos(diag.dag.size());
  for (std::size_t i = 0; i < canon.order.size(); ++i)
    pos[canon.order[i]] = static_cast<int>(i);

  std::set<std::pair<int, int>> direct;
  for (auto [u, v] : diag.directEdges) direct.insert({u, v});

  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (int i = 0; i < diag.dag.size(); ++i) {
    const DagLabel& l = diag.dag.label(canon.order[i]);
    nlohmann::ordered_json node;
    node["id"] = i;
    node["kind"] = kindOf(l.polarity);
    node["tuple"] = l.names;
    j["nodes"].push_back(std::move(node));
  }
  std::vector<std::tuple<int, int, bool>> edges;
  for (auto [u, v] : diag.dag.edgeList())
    edges.emplace_back(pos[u], pos[v], direct.count({u, v}) > 0);
  std::sort(edges.begin(), edges.end());
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v, d] : edges) {
    nlohmann::ordered_json e;
    e["src"] = u;
    e["dst"] = v;
    e["direct"] = d;
    j["edges"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

LabelledDag importDagJson(std::string_view json) {
  nlohmann::json j = nlohmann::json::parse(json);
  std::vector<DagLabel> labels;
  std::vector<int> ids;
  for (const auto& node : j.at("nodes")) {
    ids.push_back(node.at("id").get<int>());
    DagLabel l;
    l.polarity = polarityOf(node.at("kind").get<std::string>());
    for (const auto& n : node.at("tuple"))
      l.names.push_back(n.get<std::string>());
    if (l.names.empty()) throw NotADag("empty tuple on a node");
    labels.push_back(std::move(l));
  }
  std::vector<int> pos(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= static_cast<int>(ids.size()))
      throw NotADag("node ids must be 0..n-1");
    pos[ids[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      edges.emplace_back(pos[e.at("src").get<int>()],
                         pos[e.at("dst").get<int>()]);
  return LabelledDag::fromEdges(std::move(labels), edges);
}

ProvenanceDiagram importJson(std::string_view json) {
  ProvenanceDiagram diag;
  diag.dag = importDagJson(json);
  for (int v = 0; v < diag.dag.size(); ++v)
    if (diag.dag.label(v).polarity == Polarity::Consume)
      throw NotQuiescent("diagram contains a consume vertex");
  diag.directEdges = diag.dag.transitiveReduction();
  return diag;
}

}  // namespace provcalc
