#include "provcalc/terms.hpp"

#include <algorithm>

namespace provcalc {

bool TupleTerm::ground() const {
  return std::all_of(atoms.begin(), atoms.end(), [](const Atom& a) {
    return std::holds_alternative<Name>(a);
  });
}

namespace {
Process make(ProcessNode n) {
  return std::make_shared<const ProcessNode>(std::move(n));
}
}  // namespace

Process unit() {
  static const Process u = make(ProcessNode{UnitP{}});
  return u;
}

Process literal(Label l) { return make(ProcessNode{LiteralP{std::move(l)}}); }

Process literal(Polarity p, TupleTerm t) {
  return literal(Label{p, std::move(t)});
}

Process seq(Process a, Process b) {
  return make(ProcessNode{SeqP{std::move(a), std::move(b)}});
}

Process par(Process a, Process b) {
  return make(ProcessNode{ParP{std::move(a), std::move(b)}});
}

Process choice(Process a, Process b) {
  return make(ProcessNode{ChoiceP{std::move(a), std::move(b)}});
}

Process exists(Variable x, Process body) {
  return make(ProcessNode{ExistsP{std::move(x), std::move(body)}});
}

namespace {
Process foldRight(const std::vector<Process>& ps,
                  Process (*op)(Process, Process)) {
  if (ps.empty()) return unit();
  Process acc = ps.back();
  for (auto it = std::next(ps.rbegin()); it != ps.rend(); ++it)
    acc = op(*it, acc);
  return acc;
}
}  // namespace

Process parAll(const std::vector<Process>& ps) { return foldRight(ps, par); }
Process seqAll(const std::vector<Process>& ps) { return foldRight(ps, seq); }

bool sameTerm(const Process& a, const Process& b) {
  if (a.get() == b.get()) return true;
  if (a->value.index() != b->value.index()) return false;
  if (const auto* la = as<LiteralP>(a))
    return la->label == as<LiteralP>(b)->label;
  if (const auto* sa = as<SeqP>(a)) {
    const auto* sb = as<SeqP>(b);
    return sameTerm(sa->first, sb->first) && sameTerm(sa->second, sb->second);
  }
  if (const auto* pa = as<ParP>(a)) {
    const auto* pb = as<ParP>(b);
    return sameTerm(pa->left, pb->left) && sameTerm(pa->right, pb->right);
  }
  if (const auto* ca = as<ChoiceP>(a)) {
    const auto* cb = as<ChoiceP>(b);
    return sameTerm(ca->left, cb->left) && sameTerm(ca->right, cb->right);
  }
  if (const auto* ea = as<ExistsP>(a)) {
    const auto* eb = as<ExistsP>(b);
    return ea->var == eb->var && sameTerm(ea->body, eb->body);
  }
  return true;  // both UnitP
}

namespace {
void collectFree(const Process& p, std::set<Variable>& bound,
                 std::set<Variable>& out) {
  if (const auto* l = as<LiteralP>(p)) {
    for (const Atom& a : l->label.tuple.atoms)
      if (const auto* v = std::get_if<Variable>(&a))
        if (!bound.count(*v)) out.insert(*v);
  } else if (const auto* s = as<SeqP>(p)) {
    collectFree(s->first, bound, out);
    collectFree(s->second, bound, out);
  } else if (const auto* q = as<ParP>(p)) {
    collectFree(q->left, bound, out);
    collectFree(q->right, bound, out);
  } else if (const auto* c = as<ChoiceP>(p)) {
    collectFree(c->left, bound, out);
    collectFree(c->right, bound, out);
  } else if (const auto* e = as<ExistsP>(p)) {
    auto [it, fresh] = bound.insert(e->var);
    collectFree(e->body, bound, out);
    if (fresh) bound.erase(it);
  }
}
}  // namespace

std::set<Variable> freeVars(const Process& p) {
  std::set<Variable> bound, out;
  collectFree(p, bound, out);
  return out;
}

std::set<Name> groundNames(const Process& p) {
  std::set<Name> out;
  auto walk = [&out](auto&& self, const Process& q) -> void {
    if (const auto* l = as<LiteralP>(q)) {
      for (const Atom& a : l->label.tuple.atoms)
        if (const auto* n = std::get_if<Name>(&a)) out.insert(*n);
    } else if (const auto* s = as<SeqP>(q)) {
      self(self, s->first);
      self(self, s->second);
    } else if (const auto* r = as<ParP>(q)) {
      self(self, r->left);
      self(self, r->right);
    } else if (const auto* c = as<ChoiceP>(q)) {
      self(self, c->left);
      self(self, c->right);
    } else if (const auto* e = as<ExistsP>(q)) {
      self(self, e->body);
    }
  };
  walk(walk, p);
  return out;
}

bool isGround(const Process& p) { return freeVars(p).empty(); }

Process substitute(const Process& p, const Variable& x, const Name& a) {
  if (const auto* l = as<LiteralP>(p)) {
    bool hit = false;
    std::vector<Atom> atoms = l->label.tuple.atoms;
    for (Atom& at : atoms)
      if (const auto* v = std::get_if<Variable>(&at); v && *v == x) {
        at = a;
        hit = true;
      }
    if (!hit) return p;
    return literal(l->label.polarity, TupleTerm{std::move(atoms)});
  }
  if (const auto* s = as<SeqP>(p))
    return seq(substitute(s->first, x, a), substitute(s->second, x, a));
  if (const auto* q = as<ParP>(p))
    return par(substitute(q->left, x, a), substitute(q->right, x, a));
  if (const auto* c = as<ChoiceP>(p))
    return choice(substitute(c->left, x, a), substitute(c->right, x, a));
  if (const auto* e = as<ExistsP>(p)) {
    if (e->var == x) return p;  // rebound: descent stops
    return exists(e->var, substitute(e->body, x, a));
  }
  return p;  // unit
}

Process tidyUnits(const Process& p) {
  if (const auto* s = as<SeqP>(p)) {
    Process a = tidyUnits(s->first), b = tidyUnits(s->second);
    if (as<UnitP>(a)) return b;
    if (as<UnitP>(b)) return a;
    if (a.get() == s->first.get() && b.get() == s->second.get()) return p;
    return seq(a, b);
  }
  if (const auto* q = as<ParP>(p)) {
    Process a = tidyUnits(q->left), b = tidyUnits(q->right);
    if (as<UnitP>(a)) return b;
    if (as<UnitP>(b)) return a;
    if (a.get() == q->left.get() && b.get() == q->right.get()) return p;
    return par(a, b);
  }
  if (const auto* c = as<ChoiceP>(p)) {
    Process a = tidyUnits(c->left), b = tidyUnits(c->right);
    if (a.get() == c->left.get() && b.get() == c->right.get()) return p;
    return choice(a, b);
  }
  if (const auto* e = as<ExistsP>(p)) {
    Process b = tidyUnits(e->body);
    if (as<UnitP>(b)) return b;
    if (b.get() == e->body.get()) return p;
    return exists(e->var, b);
  }
  return p;
}

namespace {

bool isUnitTree(const Process& p) {
  if (as<UnitP>(p)) return true;
  if (const auto* q = as<ParP>(p))
    return isUnitTree(q->left) && isUnitTree(q->right);
  if (const auto* s = as<SeqP>(p))
    return isUnitTree(s->first) && isUnitTree(s->second);
  return false;
}

bool isData(const Process& p) {
  if (as<UnitP>(p)) return true;
  if (const auto* l = as<LiteralP>(p))
    return l->label.polarity == Polarity::Stored;
  if (const auto* q = as<ParP>(p)) return isData(q->left) && isData(q->right);
  return false;
}

bool isQuery(const Process& p) {
  if (as<UnitP>(p)) return true;
  if (const auto* l = as<LiteralP>(p))
    return l->label.polarity == Polarity::Consume;
  if (const auto* q = as<ParP>(p))
    return isQuery(q->left) && isQuery(q->right);
  if (const auto* c = as<ChoiceP>(p))
    return isQuery(c->left) && isQuery(c->right);
  if (const auto* e = as<ExistsP>(p)) return isQuery(e->body);
  return false;
}

// The strict grammar is Query;Data. A bare query is admitted via Q = Q;1,
// and a unit-valued query slot via 1;D = D keeps updates stable under the
// unit laws.
bool isUpdate(const Process& p) {
  if (const auto* s = as<SeqP>(p))
    if (isQuery(s->first) && isData(s->second)) return true;
  if (const auto* c = as<ChoiceP>(p))
    return isUpdate(c->left) && isUpdate(c->right);
  if (const auto* e = as<ExistsP>(p)) return isUpdate(e->body);
  return isQuery(p) && !isUnitTree(p);
}

bool isSystem(const Process& p) {
  if (as<UnitP>(p)) return true;
  if (const auto* l = as<LiteralP>(p))
    return l->label.polarity != Polarity::Consume || isUpdate(p);
  if (const auto* s = as<SeqP>(p)) {
    if (isSystem(s->first) && isSystem(s->second)) return true;
    return isUpdate(p);
  }
  if (const auto* q = as<ParP>(p)) {
    if (isSystem(q->left) && isSystem(q->right)) return true;
    return isUpdate(p);
  }
  return isUpdate(p);
}

}  // namespace

Grammar classify(const Process& p) {
  Process t = tidyUnits(p);
  if (isData(t)) return Grammar::Data;
  if (isQuery(t)) return Grammar::Query;
  if (isUpdate(t)) return Grammar::Update;
  if (isSystem(t)) return Grammar::System;
  return Grammar::General;
}

const char* grammarName(Grammar g) {
  switch (g) {
    case Grammar::Data: return "Data";
    case Grammar::Query: return "Query";
    case Grammar::Update: return "Update";
    case Grammar::System: return "System";
    case Grammar::General: return "General";
  }
  return "?";
}

Valuation Valuation::extended(const Variable& x, const Name& a) const {
  Valuation v = *this;
  v.over_.insert_or_assign(x, a);
  return v;
}

const Name& Valuation::operator()(const Variable& x) const {
  if (auto it = over_.find(x); it != over_.end()) return it->second;
  if (default_) return *default_;
  throw UnboundVariable(x);
}

bool Valuation::covers(const Variable& x) const {
  return default_.has_value() || over_.count(x) > 0;
}

}  // namespace provcalc
