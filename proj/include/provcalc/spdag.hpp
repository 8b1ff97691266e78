#ifndef PROVCALC_SPDAG_HPP
#define PROVCALC_SPDAG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "provcalc/terms.hpp"

namespace provcalc {

/// Ground label of a DAG vertex.
struct DagLabel {
  Polarity polarity;
  std::vector<std::string> names;

  auto operator<=>(const DagLabel&) const = default;
  std::string str() const;
};

struct NotADag : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vertex-labelled DAG kept transitively closed at all times, so edge(u,v)
/// coincides with reachability. At most 64 vertices.
class LabelledDag {
 public:
  LabelledDag() = default;

  static LabelledDag empty();
  static LabelledDag singleton(DagLabel l);

  /// Builds from an arbitrary edge list, taking the transitive closure.
  /// Throws NotADag on cycles or self-loops.
  static LabelledDag fromEdges(std::vector<DagLabel> labels,
                               const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  bool edge(int u, int v) const { return (out_[u] >> v) & 1u; }
  std::uint64_t outMask(int v) const { return out_[v]; }
  const DagLabel& label(int v) const { return labels_[v]; }
  const std::vector<DagLabel>& labels() const { return labels_; }

  int edgeCount() const;
  std::vector<std::pair<int, int>> edgeList() const;

  /// Edges not implied by other edges; closing them again gives edgeList().
  std::vector<std::pair<int, int>> transitiveReduction() const;

  /// Vertices with no incoming / no outgoing edges.
  std::uint64_t sourceMask() const;
  std::uint64_t sinkMask() const;

  friend LabelledDag parCompose(const LabelledDag& a, const LabelledDag& b);
  friend LabelledDag seqCompose(const LabelledDag& first,
                                const LabelledDag& second);
  friend LabelledDag seqComposeBoundary(const LabelledDag& first,
                                        const LabelledDag& second);
  friend LabelledDag mergeCoherentPair(const LabelledDag& d, int u, int v);
  friend LabelledDag withExtraEdge(const LabelledDag& d, int u, int v);

 private:
  std::vector<DagLabel> labels_;
  std::vector<std::uint64_t> out_;

  void closeAndCheck();
};

LabelledDag parCompose(const LabelledDag& a, const LabelledDag& b);

/// Sequential composition: `second` depends on `first`, so every vertex of
/// `second` gains an edge to every vertex of `first` (edges point from
/// derived data to the data it was derived from).
LabelledDag seqCompose(const LabelledDag& first, const LabelledDag& second);

/// Same composition built the other way: transitive closure of the boundary
/// edges sinks(second) x sources(first).
LabelledDag seqComposeBoundary(const LabelledDag& first,
                               const LabelledDag& second);

/// Coherence u ⋈ v: complementary consume/stored labels on the same tuple
/// and no directed path either way.
bool coherent(const LabelledDag& d, int u, int v);

/// Quotient collapsing a coherent pair into one artefact vertex (test and
/// cross-check utility; the minimal one-merge image).
LabelledDag mergeCoherentPair(const LabelledDag& d, int u, int v);

/// Adds one edge and re-closes; requires the reverse edge to be absent.
LabelledDag withExtraEdge(const LabelledDag& d, int u, int v);

/// True iff no 4-vertex induced subgraph is isomorphic to
/// N = ({v0..v3}, {(v2,v0),(v3,v0),(v3,v1)}). Labels are ignored.
bool isNFree(const LabelledDag& d);
std::optional<std::array<int, 4>> findNWitness(const LabelledDag& d);

struct NotSeriesParallel {
  std::array<int, 4> witness;
};

struct SpDecomposition {
  Process term;                  // built from unit, literals, ; and |
  std::vector<int> leafVertices; // literal order -> original vertex ids
};

/// Recursive series/parallel split of a transitive DAG; fails exactly on
/// graphs containing the N shape and then carries a witness 4-subset.
std::variant<SpDecomposition, NotSeriesParallel> spDecompose(
    const LabelledDag& d);

struct CanonicalDag {
  std::string key;          // equal iff label-preserving isomorphism exists
  std::vector<int> order;   // canonical vertex order
};

CanonicalDag canonicalDag(const LabelledDag& d, int maxVertices = 16);

enum class HomKind { Labelled, Smoothing, Interaction };

struct HomWitness {
  HomKind kind;
  std::vector<int> map;  // source vertex -> target vertex

  int mergeCount() const;
};

std::optional<HomWitness> findLabelledHom(const LabelledDag& src,
                                          const LabelledDag& dst);
std::optional<HomWitness> findSmoothingHom(const LabelledDag& src,
                                           const LabelledDag& dst);
std::optional<HomWitness> findInteractionHom(const LabelledDag& src,
                                             const LabelledDag& dst);

/// Validates a witness directly against the definitions.
bool checkWitness(const LabelledDag& src, const LabelledDag& dst,
                  const HomWitness& w);

/// Composes f : a -> b with g : b -> c and validates the result as a
/// witness of f's kind from a to c.
std::optional<HomWitness> composeWitnesses(const LabelledDag& a,
                                           const LabelledDag& b,
                                           const LabelledDag& c,
                                           const HomWitness& f,
                                           const HomWitness& g);

}  // namespace provcalc

#endif
