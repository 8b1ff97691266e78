#ifndef PROVCALC_CONGRUENCE_HPP
#define PROVCALC_CONGRUENCE_HPP

#include <string>
#include <vector>

#include "provcalc/terms.hpp"

namespace provcalc {

/// Prenex sum-of-series-parallel form: ex x1...xn over a set of summands,
/// each built from unit, literals, ; and | only. Summands are canonically
/// arranged (units dropped, parallel components sorted) and deduplicated.
struct NormalForm {
  std::vector<Variable> prefix;
  std::vector<Process> summands;
};

/// A single summand before prefix sharing: its own binder list (outermost
/// first) and a series-parallel body in which those binders occur free.
struct Summand {
  std::vector<Variable> binders;
  Process body;
};

/// Distributes choice over ; and | and extrudes quantifiers, yielding the
/// sum-of-series-parallel decomposition. Binders are renamed apart.
std::vector<Summand> sumOfSeriesParallel(const Process& p);

NormalForm normalize(const Process& p);

/// Rebuilds ex x1...xn.(A1 + ... + Ak) from a normal form.
Process toProcess(const NormalForm& nf);

std::string printNormalForm(const NormalForm& nf);

/// canonicalKey(p) == canonicalKey(q) iff p and q are related by the
/// structural congruence. Quantifiers are pushed to their minimal derivable
/// scope and named positionally, so derivable binder exchanges coincide
/// while underivable ones stay distinct.
std::string canonicalKey(const Process& p);

bool congruent(const Process& p, const Process& q);

/// True iff p contains only unit, literals, ; and |.
bool isSpTerm(const Process& p);

/// One congruence-axiom application at one position.
struct AxiomRewrite {
  std::string axiom;
  std::vector<int> path;
  Process result;
};

/// Every single-axiom rewrite of p, both directions, at every position.
/// Size-increasing instances (unit/quantifier introduction, choice
/// duplication) are included once per position.
std::vector<AxiomRewrite> axiomRewrites(const Process& p);

/// Replaces the subterm at path (child indices) with `sub`.
Process rebuildAt(const Process& root, const std::vector<int>& path,
                  const Process& sub);

}  // namespace provcalc

#endif
