#include "provcalc/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "provcalc/syntax.hpp"

namespace provcalc {

namespace {

// Capture-free bound-variable renaming; `to` is always globally fresh here.
Process renameVar(const Process& p, const Variable& from, const Variable& to) {
  if (const auto* l = as<LiteralP>(p)) {
    bool hit = false;
    std::vector<Atom> atoms = l->label.tuple.atoms;
    for (Atom& a : atoms)
      if (const auto* v = std::get_if<Variable>(&a); v && *v == from) {
        a = to;
        hit = true;
      }
    if (!hit) return p;
    return literal(l->label.polarity, TupleTerm{std::move(atoms)});
  }
  if (const auto* s = as<SeqP>(p))
    return seq(renameVar(s->first, from, to), renameVar(s->second, from, to));
  if (const auto* q = as<ParP>(p))
    return par(renameVar(q->left, from, to), renameVar(q->right, from, to));
  if (const auto* c = as<ChoiceP>(p))
    return choice(renameVar(c->left, from, to),
                  renameVar(c->right, from, to));
  if (const auto* e = as<ExistsP>(p)) {
    if (e->var == from) return p;
    return exists(e->var, renameVar(e->body, from, to));
  }
  return p;
}

struct SumBuilder {
  int fresh = 0;

  Variable freshVar() { return Variable{"$" + std::to_string(fresh++)}; }

  std::vector<Summand> build(const Process& p) {
    if (as<UnitP>(p) || as<LiteralP>(p)) return {Summand{{}, p}};
    if (const auto* c = as<ChoiceP>(p)) {
      std::vector<Summand> out = build(c->left);
      std::vector<Summand> rhs = build(c->right);
      out.insert(out.end(), rhs.begin(), rhs.end());
      return out;
    }
    if (const auto* e = as<ExistsP>(p)) {
      Variable x = freshVar();
      std::vector<Summand> out = build(renameVar(e->body, e->var, x));
      for (Summand& s : out) {
        std::set<Variable> fv = freeVars(s.body);
        if (fv.count(x)) s.binders.insert(s.binders.begin(), x);
      }
      return out;
    }
    const bool isSeq = as<SeqP>(p) != nullptr;
    Process a = isSeq ? as<SeqP>(p)->first : as<ParP>(p)->left;
    Process b = isSeq ? as<SeqP>(p)->second : as<ParP>(p)->right;
    std::vector<Summand> left = build(a);
    std::vector<Summand> right = build(b);
    std::vector<Summand> out;
    out.reserve(left.size() * right.size());
    for (const Summand& l : left)
      for (const Summand& r : right) {
        Summand s;
        s.binders = l.binders;
        s.binders.insert(s.binders.end(), r.binders.begin(), r.binders.end());
        s.body = isSeq ? seq(l.body, r.body) : par(l.body, r.body);
        out.push_back(std::move(s));
      }
    return out;
  }
};

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

bool occursFree(const Process& p, const Variable& x) {
  return freeVars(p).count(x) > 0;
}

// Pushes one binder to its minimal derivable scope. Never crosses another
// quantifier; over | it narrows to the components mentioning x, over ; to
// the minimal contiguous span.
Process pushBinder(const Variable& x, const Process& t) {
  if (as<ParP>(t)) {
    std::vector<Process> comps;
    flattenPar(t, comps);
    std::vector<Process> with, without;
    for (const Process& c : comps)
      (occursFree(c, x) ? with : without).push_back(c);
    if (with.size() == comps.size()) return exists(x, t);
    Process grouped = with.size() == 1 ? pushBinder(x, with[0])
                                       : exists(x, parAll(with));
    without.push_back(grouped);
    return parAll(without);
  }
  if (as<SeqP>(t)) {
    std::vector<Process> parts;
    flattenSeq(t, parts);
    std::size_t lo = parts.size(), hi = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (occursFree(parts[i], x)) {
        lo = std::min(lo, i);
        hi = i;
      }
    if (lo == 0 && hi + 1 == parts.size()) return exists(x, t);
    std::vector<Process> span(parts.begin() + lo, parts.begin() + hi + 1);
    Process grouped = span.size() == 1 ? pushBinder(x, span[0])
                                       : exists(x, seqAll(span));
    std::vector<Process> rebuilt(parts.begin(), parts.begin() + lo);
    rebuilt.push_back(grouped);
    rebuilt.insert(rebuilt.end(), parts.begin() + hi + 1, parts.end());
    return seqAll(rebuilt);
  }
  return exists(x, t);  // literal or quantifier: the scope stops here
}

Process miniscope(const Summand& s) {
  Process body = tidyUnits(s.body);
  for (auto it = s.binders.rbegin(); it != s.binders.rend(); ++it)
    if (occursFree(body, *it)) body = pushBinder(*it, body);
  return body;
}

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

// Canonical string of a choice-free term; bound variables become de Bruijn
// indices, parallel components are sorted.
std::string spKey(const Process& t, std::vector<Variable>& env) {
  if (as<UnitP>(t)) return "1";
  if (const auto* l = as<LiteralP>(t)) {
    std::string out{polChar(l->label.polarity)};
    out += '[';
    for (const Atom& a : l->label.tuple.atoms) {
      if (const auto* n = std::get_if<Name>(&a)) {
        out += 'n';
        out += escaped(n->text);
      } else {
        const Variable& v = std::get<Variable>(a);
        std::size_t i = env.size();
        while (i > 0 && !(env[i - 1] == v)) --i;
        if (i == 0) {
          out += 'f';
          out += escaped(v.text);
        } else {
          out += 'b';
          out += std::to_string(env.size() - i);
        }
      }
      out += ',';
    }
    out += ']';
    return out;
  }
  if (as<SeqP>(t)) {
    std::vector<Process> parts;
    flattenSeq(t, parts);
    if (parts.empty()) return "1";
    if (parts.size() == 1) return spKey(parts[0], env);
    std::string out = "S(";
    for (const Process& c : parts) out += spKey(c, env) + ";";
    out += ')';
    return out;
  }
  if (as<ParP>(t)) {
    std::vector<Process> comps;
    flattenPar(t, comps);
    if (comps.empty()) return "1";
    if (comps.size() == 1) return spKey(comps[0], env);
    std::vector<std::string> keys;
    keys.reserve(comps.size());
    for (const Process& c : comps) keys.push_back(spKey(c, env));
    std::sort(keys.begin(), keys.end());
    std::string out = "P(";
    for (const std::string& k : keys) out += k + "|";
    out += ')';
    return out;
  }
  const auto* e = as<ExistsP>(t);
  assert(e != nullptr);
  env.push_back(e->var);
  std::string body = spKey(e->body, env);
  env.pop_back();
  return "E(" + body + ")";
}

bool hasAdditives(const Process& p) {
  if (as<ChoiceP>(p) || as<ExistsP>(p)) return true;
  if (const auto* s = as<SeqP>(p))
    return hasAdditives(s->first) || hasAdditives(s->second);
  if (const auto* q = as<ParP>(p))
    return hasAdditives(q->left) || hasAdditives(q->right);
  return false;
}

}  // namespace

std::vector<Summand> sumOfSeriesParallel(const Process& p) {
  SumBuilder b;
  std::vector<Summand> out = b.build(p);
  for (Summand& s : out) s.body = tidyUnits(s.body);
  return out;
}

bool isSpTerm(const Process& p) {
  if (as<UnitP>(p) || as<LiteralP>(p)) return true;
  if (const auto* s = as<SeqP>(p))
    return isSpTerm(s->first) && isSpTerm(s->second);
  if (const auto* q = as<ParP>(p))
    return isSpTerm(q->left) && isSpTerm(q->right);
  return false;
}

std::string canonicalKey(const Process& p) {
  std::vector<std::string> keys;
  if (!hasAdditives(p)) {
    std::vector<Variable> env;
    keys.push_back(spKey(tidyUnits(p), env));
  } else {
    for (const Summand& s : sumOfSeriesParallel(p)) {
      Process scoped = miniscope(s);
      std::vector<Variable> env;
      keys.push_back(spKey(scoped, env));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  }
  std::string out = "+(";
  for (const std::string& k : keys) out += k + "&";
  out += ')';
  return out;
}

bool congruent(const Process& p, const Process& q) {
  return canonicalKey(p) == canonicalKey(q);
}

namespace {

// Display arrangement: units dropped, seq flattened right, par components
// sorted by their printed form.
Process displayCanon(const Process& t) {
  if (as<UnitP>(t) || as<LiteralP>(t)) return t;
  if (as<SeqP>(t)) {
    std::vector<Process> parts;
    flattenSeq(t, parts);
    for (Process& c : parts) c = displayCanon(c);
    return seqAll(parts);
  }
  std::vector<Process> comps;
  flattenPar(t, comps);
  for (Process& c : comps) c = displayCanon(c);
  std::sort(comps.begin(), comps.end(), [](const Process& a, const Process& b) {
    return printProcess(a) < printProcess(b);
  });
  return parAll(comps);
}

}  // namespace

NormalForm normalize(const Process& p) {
  std::vector<Summand> sum = sumOfSeriesParallel(p);
  std::size_t width = 0;
  for (const Summand& s : sum) width = std::max(width, s.binders.size());

  // Positional prefix names, skipping collisions with free variables.
  std::set<std::string> freeTexts;
  for (const Variable& v : freeVars(p)) freeTexts.insert(v.text);
  std::vector<Variable> prefix;
  for (std::size_t i = 1; prefix.size() < width; ++i) {
    std::string cand = "x" + std::to_string(i);
    if (!freeTexts.count(cand)) prefix.emplace_back(cand);
  }

  std::vector<Process> summands;
  for (const Summand& s : sum) {
    Process body = s.body;
    for (std::size_t i = 0; i < s.binders.size(); ++i)
      body = renameVar(body, s.binders[i], prefix[i]);
    summands.push_back(displayCanon(tidyUnits(body)));
  }
  std::sort(summands.begin(), summands.end(),
            [](const Process& a, const Process& b) {
              return printProcess(a) < printProcess(b);
            });
  summands.erase(std::unique(summands.begin(), summands.end(),
                             [](const Process& a, const Process& b) {
                               return sameTerm(a, b);
                             }),
                 summands.end());
  return NormalForm{std::move(prefix), std::move(summands)};
}

Process toProcess(const NormalForm& nf) {
  Process sum = nf.summands.empty() ? unit() : nf.summands.back();
  for (auto it = std::next(nf.summands.rbegin()); it != nf.summands.rend();
       ++it)
    sum = choice(*it, sum);
  for (auto it = nf.prefix.rbegin(); it != nf.prefix.rend(); ++it)
    sum = exists(*it, sum);
  return sum;
}

std::string printNormalForm(const NormalForm& nf) {
  return printProcess(toProcess(nf));
}

Process rebuildAt(const Process& root, const std::vector<int>& path,
                  const Process& sub) {
  std::function<Process(const Process&, std::size_t)> go =
      [&](const Process& node, std::size_t depth) -> Process {
    if (depth == path.size()) return sub;
    int idx = path[depth];
    if (const auto* s = as<SeqP>(node))
      return idx == 0 ? seq(go(s->first, depth + 1), s->second)
                      : seq(s->first, go(s->second, depth + 1));
    if (const auto* q = as<ParP>(node))
      return idx == 0 ? par(go(q->left, depth + 1), q->right)
                      : par(q->left, go(q->right, depth + 1));
    if (const auto* c = as<ChoiceP>(node))
      return idx == 0 ? choice(go(c->left, depth + 1), c->right)
                      : choice(c->left, go(c->right, depth + 1));
    if (const auto* e = as<ExistsP>(node))
      return exists(e->var, go(e->body, depth + 1));
    throw std::logic_error("rebuildAt: path into a leaf");
  };
  return go(root, 0);
}

namespace {

void collectPositions(const Process& p, std::vector<int>& path,
                      std::vector<std::pair<std::vector<int>, Process>>& out) {
  out.emplace_back(path, p);
  auto child = [&](const Process& c, int idx) {
    path.push_back(idx);
    collectPositions(c, path, out);
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

int maxDollarVar(const Process& p) {
  int mx = -1;
  auto scanVar = [&mx](const Variable& v) {
    if (v.text.size() > 1 && v.text[0] == '$')
      mx = std::max(mx, std::atoi(v.text.c_str() + 1));
  };
  std::function<void(const Process&)> go = [&](const Process& q) {
    if (const auto* l = as<LiteralP>(q)) {
      for (const Atom& a : l->label.tuple.atoms)
        if (const auto* v = std::get_if<Variable>(&a)) scanVar(*v);
    } else if (const auto* s = as<SeqP>(q)) {
      go(s->first);
      go(s->second);
    } else if (const auto* r = as<ParP>(q)) {
      go(r->left);
      go(r->right);
    } else if (const auto* c = as<ChoiceP>(q)) {
      go(c->left);
      go(c->right);
    } else if (const auto* e = as<ExistsP>(q)) {
      scanVar(e->var);
      go(e->body);
    }
  };
  go(p);
  return mx;
}

}  // namespace

std::vector<AxiomRewrite> axiomRewrites(const Process& p) {
  std::vector<AxiomRewrite> out;
  std::vector<std::pair<std::vector<int>, Process>> positions;
  std::vector<int> path;
  collectPositions(p, path, positions);
  Variable freshU{"$" + std::to_string(maxDollarVar(p) + 1)};

  auto add = [&](const std::vector<int>& at, const char* axiom,
                 const Process& local) {
    out.push_back(AxiomRewrite{axiom, at, rebuildAt(p, at, local)});
  };

  for (const auto& [at, t] : positions) {
    // size-increasing instances, once per position
    add(at, "unit-seq-intro-left", seq(unit(), t));
    add(at, "unit-seq-intro-right", seq(t, unit()));
    add(at, "unit-par-intro", par(t, unit()));
    add(at, "choice-idem-intro", choice(t, t));
    if (as<UnitP>(t)) add(at, "exists-unit-intro", exists(freshU, unit()));

    if (const auto* s = as<SeqP>(t)) {
      const Process &a = s->first, &b = s->second;
      if (as<UnitP>(a)) add(at, "unit-seq-elim-left", b);
      if (as<UnitP>(b)) add(at, "unit-seq-elim-right", a);
      if (const auto* aa = as<SeqP>(a))
        add(at, "seq-assoc-right", seq(aa->first, seq(aa->second, b)));
      if (const auto* bb = as<SeqP>(b))
        add(at, "seq-assoc-left", seq(seq(a, bb->first), bb->second));
      if (const auto* ac = as<ChoiceP>(a))
        add(at, "dist-choice-seq-left",
            choice(seq(ac->left, b), seq(ac->right, b)));
      if (const auto* bc = as<ChoiceP>(b))
        add(at, "dist-choice-seq-right",
            choice(seq(a, bc->left), seq(a, bc->right)));
      if (const auto* ae = as<ExistsP>(a))
        if (!occursFree(b, ae->var))
          add(at, "scope-seq-left", exists(ae->var, seq(ae->body, b)));
      if (const auto* be = as<ExistsP>(b))
        if (!occursFree(a, be->var))
          add(at, "scope-seq-right", exists(be->var, seq(a, be->body)));
    } else if (const auto* q = as<ParP>(t)) {
      const Process &a = q->left, &b = q->right;
      add(at, "par-comm", par(b, a));
      if (as<UnitP>(a)) add(at, "unit-par-elim-left", b);
      if (as<UnitP>(b)) add(at, "unit-par-elim-right", a);
      if (const auto* aa = as<ParP>(a))
        add(at, "par-assoc-right", par(aa->left, par(aa->right, b)));
      if (const auto* bb = as<ParP>(b))
        add(at, "par-assoc-left", par(par(a, bb->left), bb->right));
      if (const auto* ac = as<ChoiceP>(a))
        add(at, "dist-choice-par-left",
            choice(par(ac->left, b), par(ac->right, b)));
      if (const auto* bc = as<ChoiceP>(b))
        add(at, "dist-choice-par-right",
            choice(par(a, bc->left), par(a, bc->right)));
      if (const auto* ae = as<ExistsP>(a))
        if (!occursFree(b, ae->var))
          add(at, "scope-par-left", exists(ae->var, par(ae->body, b)));
      if (const auto* be = as<ExistsP>(b))
        if (!occursFree(a, be->var))
          add(at, "scope-par-right", exists(be->var, par(a, be->body)));
    } else if (const auto* c = as<ChoiceP>(t)) {
      const Process &a = c->left, &b = c->right;
      add(at, "choice-comm", choice(b, a));
      if (const auto* aa = as<ChoiceP>(a))
        add(at, "choice-assoc-right",
            choice(aa->left, choice(aa->right, b)));
      if (const auto* bb = as<ChoiceP>(b))
        add(at, "choice-assoc-left", choice(choice(a, bb->left), bb->right));
      if (sameTerm(a, b)) add(at, "choice-idem-elim", a);
      if (const auto* ae = as<ExistsP>(a))
        if (const auto* be = as<ExistsP>(b))
          if (ae->var == be->var)
            add(at, "dist-exists-choice-merge",
                exists(ae->var, choice(ae->body, be->body)));
    } else if (const auto* e = as<ExistsP>(t)) {
      const Process& body = e->body;
      if (as<UnitP>(body)) add(at, "exists-unit-elim", unit());
      if (const auto* bc = as<ChoiceP>(body))
        add(at, "dist-exists-choice",
            choice(exists(e->var, bc->left), exists(e->var, bc->right)));
      if (const auto* bq = as<ParP>(body)) {
        if (!occursFree(bq->right, e->var))
          add(at, "scope-extrude-par-left",
              par(exists(e->var, bq->left), bq->right));
        if (!occursFree(bq->left, e->var))
          add(at, "scope-extrude-par-right",
              par(bq->left, exists(e->var, bq->right)));
      }
      if (const auto* bs = as<SeqP>(body)) {
        if (!occursFree(bs->second, e->var))
          add(at, "scope-extrude-seq-left",
              seq(exists(e->var, bs->first), bs->second));
        if (!occursFree(bs->first, e->var))
          add(at, "scope-extrude-seq-right",
              seq(bs->first, exists(e->var, bs->second)));
      }
    }
  }
  return out;
}

}  // namespace provcalc
