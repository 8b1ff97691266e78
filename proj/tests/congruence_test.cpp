#include <doctest.h>

#include <deque>
#include <unordered_set>

#include "generators.hpp"
#include "provcalc/congruence.hpp"
#include "provcalc/syntax.hpp"

using namespace provcalc;

TEST_CASE("normalize unit laws") {
  NormalForm nf = normalize(parseProcess("1 | 1"));
  CHECK(nf.prefix.empty());
  REQUIRE(nf.summands.size() == 1);
  CHECK(sameTerm(nf.summands[0], unit()));
}

TEST_CASE("normalize distributes choice over seq") {
  NormalForm nf = normalize(parseProcess("([a] + [b]) ; [c]"));
  CHECK(nf.prefix.empty());
  REQUIRE(nf.summands.size() == 2);
  CHECK(printNormalForm(nf) == "[a] ; [c] + [b] ; [c]");
}

TEST_CASE("normalize collapses idempotent sums under quantifiers") {
  Process p = parseProcess("(ex ?x.(*[d] | [?x])) + ex ?x.(*[d] | [?x])");
  NormalForm nf = normalize(p);
  REQUIRE(nf.prefix.size() == 1);
  CHECK(nf.prefix[0].text == "x1");
  REQUIRE(nf.summands.size() == 1);
  CHECK(printProcess(nf.summands[0]) == "*[d] | [?x1]");
}

TEST_CASE("normal form is reachable by axiom rewriting alone") {
  // bounded closure search over single-axiom rewrites, independent of the
  // canonical-form machinery
  Process start = parseProcess("(ex ?x.(*[d] | [?x])) + ex ?x.(*[d] | [?x])");
  Process want1 = parseProcess("ex ?x.(*[d] | [?x])");
  Process want2 = parseProcess("ex ?x.([?x] | *[d])");
  std::deque<Process> frontier{start};
  std::unordered_set<std::string> seen{printProcess(start)};
  bool found = false;
  std::size_t explored = 0;
  while (!frontier.empty() && !found && explored < 3000) {
    Process cur = frontier.front();
    frontier.pop_front();
    ++explored;
    for (const AxiomRewrite& rw : axiomRewrites(cur)) {
      if (sameTerm(rw.result, want1) || sameTerm(rw.result, want2)) {
        found = true;
        break;
      }
      std::string key = printProcess(rw.result);
      if (key.size() > 60) continue;  // keep the closure bounded
      if (seen.insert(key).second) frontier.push_back(rw.result);
    }
  }
  CHECK(found);
}

TEST_CASE("congruent") {
  CHECK(congruent(parseProcess("[a] | [b]"), parseProcess("[b] | [a]")));
  CHECK_FALSE(congruent(parseProcess("[a] ; [b]"), parseProcess("[b] ; [a]")));
  Process p = parseProcess("*[d] ; [e]");
  CHECK(congruent(choice(p, p), p));
}

TEST_CASE("canonicalKey basics") {
  CHECK(canonicalKey(parseProcess("1 | 1")) == canonicalKey(unit()));
  CHECK(canonicalKey(parseProcess("[a] | [b]")) ==
        canonicalKey(parseProcess("[b] | [a]")));
  CHECK(canonicalKey(parseProcess("[a] ; [b]")) !=
        canonicalKey(parseProcess("[b] ; [a]")));
}

TEST_CASE("alpha-conversion is part of the congruence") {
  CHECK(congruent(parseProcess("ex ?x.[?x]"), parseProcess("ex ?y.[?y]")));
  CHECK_FALSE(congruent(parseProcess("ex ?x.[?x a]"),
                        parseProcess("ex ?y.[a ?y]")));
}

TEST_CASE("separable binder exchange coincides, entangled stays distinct") {
  // commuting independently quantified components is derivable
  Process a = parseProcess("(ex ?x.[?x]) | (ex ?y.*[?y])");
  Process b = parseProcess("(ex ?y.*[?y]) | (ex ?x.[?x])");
  CHECK(congruent(a, b));
  Process prenex1 = parseProcess("ex ?x.ex ?y.([?x] | *[?y])");
  CHECK(congruent(a, prenex1));
  Process prenex2 = parseProcess("ex ?y.ex ?x.([?x] | *[?y])");
  CHECK(congruent(prenex1, prenex2));

  // both binders in one literal: the order is not exchangeable
  Process e1 = parseProcess("ex ?x.ex ?y.[?x ?y]");
  Process e2 = parseProcess("ex ?y.ex ?x.[?x ?y]");
  CHECK_FALSE(congruent(e1, e2));
}

TEST_CASE("vacuous quantification is congruent to its body") {
  CHECK(congruent(parseProcess("ex ?x.*[d]"), parseProcess("*[d]")));
  CHECK(congruent(parseProcess("ex ?x.1"), unit()));
}

TEST_CASE("scope extrusion respects freshness") {
  Process in = parseProcess("ex ?x.([?x] | *[d])");
  Process out = parseProcess("(ex ?x.[?x]) | *[d]");
  CHECK(congruent(in, out));
  // the side condition blocks capture: ?x free on the right differs
  Process captured = par(exists(Variable{"x"},
                                parseProcess("[?x]")),
                         parseProcess("*[?x]"));
  CHECK_FALSE(congruent(captured, exists(Variable{"x"},
                                         parseProcess("[?x] | *[?x]"))));
}

TEST_CASE("every axiom application preserves the canonical key") {
  testgen::Rng rng(77001);
  auto pool = testgen::smallPool();
  int applications = 0;
  for (int i = 0; i < 120; ++i) {
    Process t = testgen::genClosedTerm(rng, 1 + rng.below(5), 2, pool);
    std::string key = canonicalKey(t);
    for (const AxiomRewrite& rw : axiomRewrites(t)) {
      CAPTURE(printProcess(t));
      CAPTURE(rw.axiom);
      CAPTURE(printProcess(rw.result));
      REQUIRE(canonicalKey(rw.result) == key);
      ++applications;
    }
  }
  CHECK(applications > 1000);
}

TEST_CASE("normalize is idempotent") {
  testgen::Rng rng(77002);
  auto pool = testgen::smallPool();
  for (int i = 0; i < 80; ++i) {
    Process t = testgen::genClosedTerm(rng, 1 + rng.below(5), 2, pool);
    NormalForm nf = normalize(t);
    Process rebuilt = toProcess(nf);
    CHECK(congruent(rebuilt, t));
    CHECK(printNormalForm(normalize(rebuilt)) == printNormalForm(nf));
  }
}

TEST_CASE("summands are series-parallel") {
  testgen::Rng rng(77003);
  auto pool = testgen::smallPool();
  for (int i = 0; i < 50; ++i) {
    Process t = testgen::genClosedTerm(rng, 1 + rng.below(6), 2, pool);
    for (const Summand& s : sumOfSeriesParallel(t)) {
      CHECK(isSpTerm(s.body));
      for (const Variable& b : s.binders)
        CHECK(freeVars(s.body).count(b) == 1);
    }
    NormalForm nf = normalize(t);
    for (const Process& a : nf.summands) CHECK(isSpTerm(a));
  }
}
