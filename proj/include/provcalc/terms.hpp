#ifndef PROVCALC_TERMS_HPP
#define PROVCALC_TERMS_HPP

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace provcalc {

/// An opaque token: a bare identifier or an IRI. Equality is exact text
/// equality; no dereferencing or validation beyond nonemptiness.
struct Name {
  std::string text;

  explicit Name(std::string t) : text(std::move(t)) {
    if (text.empty()) throw std::invalid_argument("empty name");
  }
  auto operator<=>(const Name&) const = default;
};

struct Variable {
  std::string text;

  explicit Variable(std::string t) : text(std::move(t)) {
    if (text.empty()) throw std::invalid_argument("empty variable");
  }
  auto operator<=>(const Variable&) const = default;
};

using Atom = std::variant<Name, Variable>;

/// Ordered, nonempty sequence of names and variables. Ground iff no variable
/// occurs. Arity is arbitrary; all shipped fixtures use triples.
struct TupleTerm {
  std::vector<Atom> atoms;

  explicit TupleTerm(std::vector<Atom> a) : atoms(std::move(a)) {
    if (atoms.empty()) throw std::invalid_argument("empty tuple");
  }
  bool ground() const;
  auto operator<=>(const TupleTerm&) const = default;
};

enum class Polarity { Consume, Stored, Artefact };

/// A polarised tuple: d (consume), *d (stored) or #d (artefact).
struct Label {
  Polarity polarity;
  TupleTerm tuple;

  auto operator<=>(const Label&) const = default;
};

struct ProcessNode;
using Process = std::shared_ptr<const ProcessNode>;

struct UnitP {};
struct LiteralP {
  Label label;
};
struct SeqP {
  Process first, second;
};
struct ParP {
  Process left, right;
};
struct ChoiceP {
  Process left, right;
};
struct ExistsP {
  Variable var;
  Process body;
};

struct ProcessNode {
  std::variant<UnitP, LiteralP, SeqP, ParP, ChoiceP, ExistsP> value;
};

Process unit();
Process literal(Label l);
Process literal(Polarity p, TupleTerm t);
Process seq(Process a, Process b);
Process par(Process a, Process b);
Process choice(Process a, Process b);
Process exists(Variable x, Process body);

/// Right-nested fold of a nonempty list; an empty list gives unit().
Process parAll(const std::vector<Process>& ps);
Process seqAll(const std::vector<Process>& ps);

template <class T>
const T* as(const Process& p) {
  return std::get_if<T>(&p->value);
}

/// Structural equality (bound-variable names compared verbatim).
bool sameTerm(const Process& a, const Process& b);

/// Unit-law cleanup: drops unit operands of ; and |, collapses ex x.1 to 1.
/// The result is congruent to p.
Process tidyUnits(const Process& p);

std::set<Variable> freeVars(const Process& p);
std::set<Name> groundNames(const Process& p);
bool isGround(const Process& p);

/// Replace every free occurrence of x by the name a. Subterms that rebind x
/// stop the descent; names never capture.
Process substitute(const Process& p, const Variable& x, const Name& a);

enum class Grammar { Data, Query, Update, System, General };

/// Most specific of the Data / Query / Update / System sub-grammars matching
/// p, checked up to the unit laws (a bare query counts as an update via
/// Q = Q;1). General if none matches.
Grammar classify(const Process& p);

const char* grammarName(Grammar g);

/// Total map from variables to names: a finite override over an optional
/// default. Lookup of an unbound variable without a default throws.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(Name defaultName) : default_(std::move(defaultName)) {}

  Valuation extended(const Variable& x, const Name& a) const;
  const Name& operator()(const Variable& x) const;
  bool covers(const Variable& x) const;

 private:
  std::map<Variable, Name> over_;
  std::optional<Name> default_;
};

struct UnboundVariable : std::runtime_error {
  Variable var;
  explicit UnboundVariable(Variable v)
      : std::runtime_error("unbound variable ?" + v.text), var(std::move(v)) {}
};

}  // namespace provcalc

#endif
