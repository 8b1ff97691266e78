#include "provcalc/spdag.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace provcalc {

namespace {
constexpr int kHardCap = 64;

std::string escaped(const std::string& s) {
  return std::to_string(s.size()) + ":" + s;
}

char polChar(Polarity p) {
  switch (p) {
    case Polarity::Consume: return 'c';
    case Polarity::Stored: return 's';
    case Polarity::Artefact: return 'a';
  }
  return '?';
}

std::string labelKey(const DagLabel& l) {
  std::string out{polChar(l.polarity)};
  for (const std::string& n : l.names) out += escaped(n);
  return out;
}
}  // namespace

std::string DagLabel::str() const {
  std::string out;
  switch (polarity) {
    case Polarity::Consume: break;
    case Polarity::Stored: out += '*'; break;
    case Polarity::Artefact: out += '#'; break;
  }
  out += '[';
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ' ';
    out += names[i];
  }
  out += ']';
  return out;
}

LabelledDag LabelledDag::empty() { return LabelledDag{}; }

LabelledDag LabelledDag::singleton(DagLabel l) {
  LabelledDag d;
  d.labels_.push_back(std::move(l));
  d.out_.push_back(0);
  return d;
}

void LabelledDag::closeAndCheck() {
  const int n = size();
  if (n > kHardCap) throw SizeExceeded("DAG larger than 64 vertices");
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      std::uint64_t acc = out_[v];
      std::uint64_t m = out_[v];
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        acc |= out_[w];
      }
      if (acc != out_[v]) {
        out_[v] = acc;
        changed = true;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (edge(v, v)) throw NotADag("cycle through vertex " + std::to_string(v));
}

LabelledDag LabelledDag::fromEdges(
    std::vector<DagLabel> labels,
    const std::vector<std::pair<int, int>>& edges) {
  LabelledDag d;
  d.labels_ = std::move(labels);
  if (static_cast<int>(d.labels_.size()) > kHardCap)
    throw SizeExceeded("DAG larger than 64 vertices");
  d.out_.assign(d.labels_.size(), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= d.size() || v >= d.size())
      throw NotADag("edge endpoint out of range");
    if (u == v) throw NotADag("self-loop");
    d.out_[u] |= std::uint64_t{1} << v;
  }
  d.closeAndCheck();
  return d;
}

int LabelledDag::edgeCount() const {
  int total = 0;
  for (std::uint64_t m : out_) total += std::popcount(m);
  return total;
}

std::vector<std::pair<int, int>> LabelledDag::edgeList() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    std::uint64_t m = out_[u];
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> LabelledDag::transitiveReduction() const {
  std::vector<std::pair<int, int>> direct;
  for (auto [u, v] : edgeList()) {
    bool implied = false;
    std::uint64_t mids = out_[u] & ~(std::uint64_t{1} << v);
    while (mids && !implied) {
      int m = std::countr_zero(mids);
      mids &= mids - 1;
      if (edge(m, v)) implied = true;
    }
    if (!implied) direct.emplace_back(u, v);
  }
  return direct;
}

std::uint64_t LabelledDag::sourceMask() const {
  std::uint64_t incoming = 0;
  for (std::uint64_t m : out_) incoming |= m;
  std::uint64_t all =
      size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
  return all & ~incoming;
}

std::uint64_t LabelledDag::sinkMask() const {
  std::uint64_t sinks = 0;
  for (int v = 0; v < size(); ++v)
    if (out_[v] == 0) sinks |= std::uint64_t{1} << v;
  return sinks;
}

LabelledDag parCompose(const LabelledDag& a, const LabelledDag& b) {
  if (a.size() + b.size() > kHardCap)
    throw SizeExceeded("DAG larger than 64 vertices");
  LabelledDag d;
  d.labels_ = a.labels_;
  d.labels_.insert(d.labels_.end(), b.labels_.begin(), b.labels_.end());
  d.out_ = a.out_;
  const int off = a.size();
  for (int v = 0; v < b.size(); ++v) d.out_.push_back(b.out_[v] << off);
  return d;
}

LabelledDag seqCompose(const LabelledDag& first, const LabelledDag& second) {
  LabelledDag d = parCompose(first, second);
  const int off = first.size();
  const std::uint64_t firstMask =
      off >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << off) - 1;
  for (int v = 0; v < second.size(); ++v) d.out_[off + v] |= firstMask;
  return d;
}

LabelledDag seqComposeBoundary(const LabelledDag& first,
                               const LabelledDag& second) {
  LabelledDag d = parCompose(first, second);
  const int off = first.size();
  std::uint64_t targets = first.sourceMask();
  std::uint64_t froms = second.sinkMask();
  while (froms) {
    int v = std::countr_zero(froms);
    froms &= froms - 1;
    d.out_[off + v] |= targets;
  }
  d.closeAndCheck();
  return d;
}

bool coherent(const LabelledDag& d, int u, int v) {
  if (u == v || d.edge(u, v) || d.edge(v, u)) return false;
  const DagLabel &lu = d.label(u), &lv = d.label(v);
  if (lu.names != lv.names) return false;
  return (lu.polarity == Polarity::Consume &&
          lv.polarity == Polarity::Stored) ||
         (lu.polarity == Polarity::Stored && lv.polarity == Polarity::Consume);
}

LabelledDag mergeCoherentPair(const LabelledDag& d, int u, int v) {
  if (!coherent(d, u, v)) throw std::logic_error("pair is not coherent");
  std::vector<DagLabel> labels;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> remap(d.size(), -1);
  for (int w = 0; w < d.size(); ++w) {
    if (w == u || w == v) continue;
    remap[w] = static_cast<int>(labels.size());
    labels.push_back(d.label(w));
  }
  int merged = static_cast<int>(labels.size());
  labels.push_back(DagLabel{Polarity::Artefact, d.label(u).names});
  remap[u] = remap[v] = merged;
  for (auto [a, b] : d.edgeList()) edges.emplace_back(remap[a], remap[b]);
  return LabelledDag::fromEdges(std::move(labels), edges);
}

LabelledDag withExtraEdge(const LabelledDag& d, int u, int v) {
  if (u == v || d.edge(v, u)) throw std::logic_error("edge would close a cycle");
  LabelledDag out = d;
  out.out_[u] |= std::uint64_t{1} << v;
  out.closeAndCheck();
  return out;
}

namespace {

// Exact isomorphism test of a 4-vertex induced subgraph against the N shape.
bool inducedIsN(const LabelledDag& d, const std::array<int, 4>& vs) {
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && d.edge(vs[i], vs[j])) ++edges;
  if (edges != 3) return false;
  std::array<int, 4> perm{0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    int v0 = vs[perm[0]], v1 = vs[perm[1]], v2 = vs[perm[2]],
        v3 = vs[perm[3]];
    if (d.edge(v2, v0) && d.edge(v3, v0) && d.edge(v3, v1) &&
        !d.edge(v2, v1)) {
      // edge count already pinned to 3, so the rest are absent
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::optional<std::array<int, 4>> findNWitness(const LabelledDag& d) {
  const int n = d.size();
  std::array<int, 4> vs{};
  for (vs[0] = 0; vs[0] < n; ++vs[0])
    for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
      for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
        for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3])
          if (inducedIsN(d, vs)) return vs;
  return std::nullopt;
}

bool isNFree(const LabelledDag& d) { return !findNWitness(d).has_value(); }

namespace {

std::vector<std::vector<int>> maskComponents(const LabelledDag& d,
                                             std::uint64_t verts,
                                             bool incomparability) {
  std::vector<std::vector<int>> comps;
  std::uint64_t left = verts;
  while (left) {
    int seed = std::countr_zero(left);
    std::uint64_t comp = std::uint64_t{1} << seed;
    bool grew = true;
    while (grew) {
      grew = false;
      std::uint64_t candidates = left & ~comp;
      std::uint64_t m = candidates;
      while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        std::uint64_t inComp = comp;
        bool attached = false;
        while (inComp && !attached) {
          int u = std::countr_zero(inComp);
          inComp &= inComp - 1;
          bool related = d.edge(u, v) || d.edge(v, u);
          attached = incomparability ? !related : related;
        }
        if (attached) {
          comp |= std::uint64_t{1} << v;
          grew = true;
        }
      }
    }
    std::vector<int> vs;
    std::uint64_t m = comp;
    while (m) {
      vs.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    comps.push_back(std::move(vs));
    left &= ~comp;
  }
  return comps;
}

struct DecompFail {
  std::array<int, 4> witness;
};

// Series/parallel split over a vertex subset; vertices listed in term order.
std::variant<Process, DecompFail> decomposeMask(const LabelledDag& d,
                                                std::uint64_t verts,
                                                std::vector<int>& leaves) {
  int count = std::popcount(verts);
  if (count == 0) return unit();
  if (count == 1) {
    int v = std::countr_zero(verts);
    leaves.push_back(v);
    std::vector<Atom> atoms;
    for (const std::string& n : d.label(v).names) atoms.emplace_back(Name{n});
    return literal(d.label(v).polarity, TupleTerm{std::move(atoms)});
  }

  // parallel split: weakly connected components
  auto weak = maskComponents(d, verts, false);
  if (weak.size() > 1) {
    std::vector<Process> parts;
    for (const auto& comp : weak) {
      std::uint64_t m = 0;
      for (int v : comp) m |= std::uint64_t{1} << v;
      auto sub = decomposeMask(d, m, leaves);
      if (auto* fail = std::get_if<DecompFail>(&sub)) return *fail;
      parts.push_back(std::get<Process>(sub));
    }
    return parAll(parts);
  }

  // series split: components of the incomparability graph, which are
  // uniformly and totally ordered in a transitive DAG whenever there is
  // more than one
  auto layers = maskComponents(d, verts, true);
  if (layers.size() > 1) {
    // order: layer A earlier than B iff edges point B -> A
    std::sort(layers.begin(), layers.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                return d.edge(b[0], a[0]);
              });
    for (std::size_t i = 0; i + 1 < layers.size(); ++i)
      if (!d.edge(layers[i + 1][0], layers[i][0]))
        throw std::logic_error("incomparability layers not totally ordered");
    std::vector<Process> parts;
    for (const auto& comp : layers) {
      std::uint64_t m = 0;
      for (int v : comp) m |= std::uint64_t{1} << v;
      auto sub = decomposeMask(d, m, leaves);
      if (auto* fail = std::get_if<DecompFail>(&sub)) return *fail;
      parts.push_back(std::get<Process>(sub));
    }
    return seqAll(parts);
  }

  // prime: the N shape must occur inside this subset
  std::array<int, 4> best{};
  std::vector<int> vs;
  std::uint64_t m = verts;
  while (m) {
    vs.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  const int k = static_cast<int>(vs.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int e = c + 1; e < k; ++e) {
          std::array<int, 4> cand{vs[a], vs[b], vs[c], vs[e]};
          if (inducedIsN(d, cand)) return DecompFail{cand};
        }
  throw std::logic_error("prime module without an N witness");
  return DecompFail{best};
}

}  // namespace

std::variant<SpDecomposition, NotSeriesParallel> spDecompose(
    const LabelledDag& d) {
  std::uint64_t all = d.size() == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << d.size()) - 1;
  std::vector<int> leaves;
  auto r = decomposeMask(d, all, leaves);
  if (auto* fail = std::get_if<DecompFail>(&r))
    return NotSeriesParallel{fail->witness};
  return SpDecomposition{std::get<Process>(r), std::move(leaves)};
}

namespace {

struct CanonTree {
  enum Kind { Leaf, Series, Parallel } kind = Leaf;
  int vertex = -1;
  std::vector<CanonTree> children;
  std::string key;
};

CanonTree canonTreeOf(const LabelledDag& d, const Process& term,
                      const std::vector<int>& leaves, std::size_t& next) {
  if (as<LiteralP>(term)) {
    CanonTree t;
    t.kind = CanonTree::Leaf;
    t.vertex = leaves[next++];
    t.key = "L" + labelKey(d.label(t.vertex));
    return t;
  }
  CanonTree t;
  std::vector<Process> parts;
  if (as<SeqP>(term)) {
    t.kind = CanonTree::Series;
    const auto* s = as<SeqP>(term);
    Process cur = term;
    while (const auto* ss = as<SeqP>(cur)) {
      parts.push_back(ss->first);
      cur = ss->second;
    }
    parts.push_back(cur);
    (void)s;
  } else if (as<ParP>(term)) {
    t.kind = CanonTree::Parallel;
    Process cur = term;
    while (const auto* pp = as<ParP>(cur)) {
      parts.push_back(pp->left);
      cur = pp->right;
    }
    parts.push_back(cur);
  } else {
    t.kind = CanonTree::Leaf;
    t.vertex = -1;
    t.key = "0";  // the empty dag
    return t;
  }
  for (const Process& c : parts)
    t.children.push_back(canonTreeOf(d, c, leaves, next));
  if (t.kind == CanonTree::Parallel)
    std::sort(t.children.begin(), t.children.end(),
              [](const CanonTree& a, const CanonTree& b) {
                return a.key < b.key;
              });
  t.key = t.kind == CanonTree::Series ? "S(" : "P(";
  for (const CanonTree& c : t.children) t.key += c.key + ",";
  t.key += ')';
  return t;
}

void collectLeaves(const CanonTree& t, std::vector<int>& order) {
  if (t.kind == CanonTree::Leaf) {
    if (t.vertex >= 0) order.push_back(t.vertex);
    return;
  }
  for (const CanonTree& c : t.children) collectLeaves(c, order);
}

// Minimal-encoding canonical labelling for the rare non-series-parallel
// inputs (spcheck files); exact search with prefix pruning.
struct PermCanon {
  const LabelledDag& d;
  std::vector<std::string> labelKeys;
  std::vector<int> best;
  std::string bestEnc;

  explicit PermCanon(const LabelledDag& dag) : d(dag) {
    for (int v = 0; v < d.size(); ++v) labelKeys.push_back(labelKey(d.label(v)));
  }

  std::string encodeRow(const std::vector<int>& perm, int idx) {
    std::string enc = labelKeys[perm[idx]];
    enc += '|';
    for (int j = 0; j < idx; ++j) {
      enc += d.edge(perm[idx], perm[j]) ? '1' : '0';
      enc += d.edge(perm[j], perm[idx]) ? '1' : '0';
    }
    enc += ';';
    return enc;
  }

  void search(std::vector<int>& perm, std::vector<bool>& used,
              const std::string& enc) {
    int idx = static_cast<int>(perm.size());
    if (!bestEnc.empty() && enc.compare(0, enc.size(), bestEnc, 0,
                                        std::min(enc.size(),
                                                 bestEnc.size())) > 0)
      return;
    if (idx == d.size()) {
      if (bestEnc.empty() || enc < bestEnc) {
        bestEnc = enc;
        best = perm;
      }
      return;
    }
    // candidates minimising the next row first
    std::vector<std::pair<std::string, int>> cands;
    for (int v = 0; v < d.size(); ++v) {
      if (used[v]) continue;
      perm.push_back(v);
      cands.emplace_back(encodeRow(perm, idx), v);
      perm.pop_back();
    }
    std::sort(cands.begin(), cands.end());
    for (const auto& [row, v] : cands) {
      perm.push_back(v);
      used[v] = true;
      search(perm, used, enc + row);
      used[v] = false;
      perm.pop_back();
    }
  }
};

}  // namespace

CanonicalDag canonicalDag(const LabelledDag& d, int maxVertices) {
  if (d.size() > maxVertices)
    throw SizeExceeded("canonicalDag: " + std::to_string(d.size()) +
                       " vertices exceeds bound " +
                       std::to_string(maxVertices));
  auto decomp = spDecompose(d);
  if (const auto* sp = std::get_if<SpDecomposition>(&decomp)) {
    std::size_t next = 0;
    CanonTree t = canonTreeOf(d, sp->term, sp->leafVertices, next);
    std::vector<int> order;
    collectLeaves(t, order);
    return CanonicalDag{"sp:" + t.key, std::move(order)};
  }
  PermCanon pc(d);
  std::vector<int> perm;
  std::vector<bool> used(d.size(), false);
  pc.search(perm, used, "");
  return CanonicalDag{"pm:" + pc.bestEnc, std::move(pc.best)};
}

int HomWitness::mergeCount() const {
  std::vector<int> seen;
  int merges = 0;
  for (int w : map) {
    if (std::find(seen.begin(), seen.end(), w) != seen.end()) ++merges;
    seen.push_back(w);
  }
  return merges;
}

namespace {

struct HomSearch {
  const LabelledDag& src;
  const LabelledDag& dst;
  bool onto;
  bool pairMerges;  // coherent pairs onto artefact vertices
  bool freeMerges;  // arbitrary same-label merges (plain labelled homs)

  std::vector<int> map;         // src -> dst or -1
  std::vector<int> fiberCount;  // dst -> assigned preimages
  std::vector<int> order;       // assignment order over src vertices

  HomSearch(const LabelledDag& s, const LabelledDag& t, bool o, bool pm,
            bool fm)
      : src(s), dst(t), onto(o), pairMerges(pm), freeMerges(fm) {
    map.assign(src.size(), -1);
    fiberCount.assign(dst.size(), 0);
    order.resize(src.size());
    std::iota(order.begin(), order.end(), 0);
    // most-constrained first: fewest label-compatible targets
    std::vector<int> cand(src.size(), 0);
    for (int u = 0; u < src.size(); ++u)
      for (int w = 0; w < dst.size(); ++w)
        if (compatible(u, w)) ++cand[u];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cand[a] < cand[b]; });
  }

  bool compatible(int u, int w) const {
    if (src.label(u) == dst.label(w)) return true;
    if (!pairMerges) return false;
    const DagLabel& lw = dst.label(w);
    const DagLabel& lu = src.label(u);
    return lw.polarity == Polarity::Artefact &&
           lu.polarity != Polarity::Artefact && lu.names == lw.names;
  }

  bool tryAssign(int u, int w) {
    if (!compatible(u, w)) return false;
    const bool labelEqual = src.label(u) == dst.label(w);
    if (fiberCount[w] > 0) {
      if (freeMerges && labelEqual) {
        // fine: arbitrary merging of equal labels
      } else {
        if (!pairMerges || fiberCount[w] >= 2) return false;
        int other = -1;
        for (int x = 0; x < src.size(); ++x)
          if (map[x] == w) other = x;
        if (!coherent(src, u, other)) return false;
        if (dst.label(w).polarity != Polarity::Artefact) return false;
        if (labelEqual || src.label(other) == dst.label(w))
          return false;  // an artefact occupant cannot be paired
      }
    }
    for (int x = 0; x < src.size(); ++x) {
      if (map[x] < 0 || x == u) continue;
      if (src.edge(u, x) && !(map[x] != w && dst.edge(w, map[x])))
        return false;
      if (src.edge(x, u) && !(map[x] != w && dst.edge(map[x], w)))
        return false;
    }
    return true;
  }

  bool finishOk() const {
    for (int w = 0; w < dst.size(); ++w) {
      if (onto && fiberCount[w] == 0) return false;
      if (fiberCount[w] == 1 && pairMerges) {
        // a lone occupant must match the target label exactly
        for (int u = 0; u < src.size(); ++u)
          if (map[u] == w && !(src.label(u) == dst.label(w))) return false;
      }
    }
    return true;
  }

  bool search(std::size_t k) {
    if (k == order.size()) return finishOk();
    int u = order[k];
    // surjectivity pruning
    if (onto) {
      int uncovered = 0;
      for (int w = 0; w < dst.size(); ++w)
        if (fiberCount[w] == 0) ++uncovered;
      if (uncovered > static_cast<int>(order.size() - k)) return false;
    }
    for (int w = 0; w < dst.size(); ++w) {
      if (!tryAssign(u, w)) continue;
      map[u] = w;
      ++fiberCount[w];
      if (search(k + 1)) return true;
      --fiberCount[w];
      map[u] = -1;
    }
    return false;
  }
};

std::optional<HomWitness> runSearch(const LabelledDag& src,
                                    const LabelledDag& dst, HomKind kind) {
  const bool onto = kind != HomKind::Labelled;
  const bool pairMerges = kind == HomKind::Interaction;
  const bool freeMerges = kind == HomKind::Labelled;
  if (kind == HomKind::Smoothing && src.size() != dst.size())
    return std::nullopt;
  if (onto && src.size() < dst.size()) return std::nullopt;
  HomSearch hs(src, dst, onto, pairMerges, freeMerges);
  if (!hs.search(0)) return std::nullopt;
  return HomWitness{kind, hs.map};
}

}  // namespace

std::optional<HomWitness> findLabelledHom(const LabelledDag& src,
                                          const LabelledDag& dst) {
  return runSearch(src, dst, HomKind::Labelled);
}

std::optional<HomWitness> findSmoothingHom(const LabelledDag& src,
                                           const LabelledDag& dst) {
  return runSearch(src, dst, HomKind::Smoothing);
}

std::optional<HomWitness> findInteractionHom(const LabelledDag& src,
                                             const LabelledDag& dst) {
  return runSearch(src, dst, HomKind::Interaction);
}

bool checkWitness(const LabelledDag& src, const LabelledDag& dst,
                  const HomWitness& w) {
  if (static_cast<int>(w.map.size()) != src.size()) return false;
  for (int u = 0; u < src.size(); ++u)
    if (w.map[u] < 0 || w.map[u] >= dst.size()) return false;
  // edges
  for (int u = 0; u < src.size(); ++u)
    for (int v = 0; v < src.size(); ++v)
      if (u != v && src.edge(u, v))
        if (w.map[u] == w.map[v] || !dst.edge(w.map[u], w.map[v]))
          return false;
  // fibers
  std::vector<std::vector<int>> fibers(dst.size());
  for (int u = 0; u < src.size(); ++u) fibers[w.map[u]].push_back(u);
  switch (w.kind) {
    case HomKind::Labelled:
      for (int u = 0; u < src.size(); ++u)
        if (!(src.label(u) == dst.label(w.map[u]))) return false;
      return true;
    case HomKind::Smoothing:
      if (src.size() != dst.size()) return false;
      for (const auto& f : fibers)
        if (f.size() != 1) return false;
      for (int u = 0; u < src.size(); ++u)
        if (!(src.label(u) == dst.label(w.map[u]))) return false;
      return true;
    case HomKind::Interaction:
      for (int t = 0; t < dst.size(); ++t) {
        const auto& f = fibers[t];
        if (f.empty()) return false;  // onto
        if (f.size() == 1) {
          if (!(src.label(f[0]) == dst.label(t))) return false;
        } else if (f.size() == 2) {
          if (!coherent(src, f[0], f[1])) return false;
          if (dst.label(t).polarity != Polarity::Artefact) return false;
          if (dst.label(t).names != src.label(f[0]).names) return false;
        } else {
          return false;
        }
      }
      return true;
  }
  return false;
}

std::optional<HomWitness> composeWitnesses(const LabelledDag& a,
                                           const LabelledDag& b,
                                           const LabelledDag& c,
                                           const HomWitness& f,
                                           const HomWitness& g) {
  if (static_cast<int>(f.map.size()) != a.size() ||
      static_cast<int>(g.map.size()) != b.size())
    return std::nullopt;
  HomWitness h{f.kind, std::vector<int>(a.size())};
  for (int u = 0; u < a.size(); ++u) h.map[u] = g.map[f.map[u]];
  if (!checkWitness(a, c, h)) return std::nullopt;
  return h;
}

}  // namespace provcalc
