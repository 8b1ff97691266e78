#ifndef PROVCALC_PROVENANCE_HPP
#define PROVCALC_PROVENANCE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "provcalc/spdag.hpp"
#include "provcalc/terms.hpp"

namespace provcalc {

struct NotQuiescent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A "was derived from" diagram: a transitively closed DAG over stored and
/// artefact vertices plus its transitive reduction for display.
struct ProvenanceDiagram {
  LabelledDag dag;
  std::vector<std::pair<int, int>> directEdges;
};

/// Denotes a quiescent ground state as its provenance diagram. Throws
/// NotQuiescent if consume literals, choice or quantifiers remain.
ProvenanceDiagram extractProvenance(const Process& terminal,
                                    const Valuation& v = Valuation{});

/// Multi-step was-derived-from: the closure edge u -> w.
bool multiStepDerivedFrom(const ProvenanceDiagram& diag, int u, int w);

struct DotOptions {
  bool transitive = false;  // draw all closure edges instead of the reduction
};

std::string exportDot(const ProvenanceDiagram& diag, DotOptions opts = {});

/// Stable-key, byte-deterministic JSON; isomorphic diagrams export equal
/// bytes. Node ids follow the canonical vertex order.
std::string exportJson(const ProvenanceDiagram& diag);

/// Reads the exportJson schema back (consume vertices are also accepted, for
/// structure checks on arbitrary labelled DAGs). Edges are re-closed.
LabelledDag importDagJson(std::string_view json);

ProvenanceDiagram importJson(std::string_view json);

}  // namespace provcalc

#endif
