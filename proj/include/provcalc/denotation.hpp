#ifndef PROVCALC_DENOTATION_HPP
#define PROVCALC_DENOTATION_HPP

#include <string>
#include <vector>

#include "provcalc/congruence.hpp"
#include "provcalc/spdag.hpp"
#include "provcalc/terms.hpp"

namespace provcalc {

/// Finite truncation of the name universe used to ground quantifiers.
struct Universe {
  std::vector<Name> names;  // sorted, unique

  static Universe of(std::vector<Name> ns);
  bool empty() const { return names.empty(); }
};

struct EmptyUniverse : std::runtime_error {
  EmptyUniverse() : std::runtime_error("empty universe under a quantifier") {}
};

/// Finite generator set standing for its homomorphism closure: a DAG is in
/// the ideal iff some generator admits a kind-homomorphism into it.
struct IdealRep {
  HomKind kind = HomKind::Interaction;
  std::vector<LabelledDag> generators;   // canonically deduplicated
  std::vector<std::string> keys;         // canonicalDag keys, same order
};

/// Structural map from a series-parallel term to its DAG: unit to the empty
/// DAG, literals to singletons, ; and | to the two compositions.
LabelledDag termToDag(const Process& spTerm, const Valuation& v);

/// Generators of the denotation: one DAG per normal-form summand per
/// instantiation of its binders over U.
IdealRep denote(const Process& p, const Valuation& v, HomKind kind,
                const Universe& u);

bool idealMember(const LabelledDag& d, const IdealRep& ideal);

/// Cross-check membership by chains of minimal one-merge quotients and
/// single edge additions instead of one homomorphism search.
bool idealMemberViaChains(const LabelledDag& d, const IdealRep& ideal);

bool idealIncluded(const Process& p, const Process& q, HomKind kind,
                   const Universe& u, const Valuation& v = Valuation{});

/// Ground names of both terms plus k fresh names, k being the larger
/// quantifier count; fresh names never collide with existing ones.
Universe decisionUniverse(const Process& p, const Process& q,
                          const std::vector<Name>& extras = {});

int binderCount(const Process& p);

}  // namespace provcalc

#endif
