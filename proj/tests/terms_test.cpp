#include <doctest.h>

#include "provcalc/syntax.hpp"
#include "provcalc/terms.hpp"

using namespace provcalc;

namespace {
Process lit(Polarity pol, std::vector<Atom> atoms) {
  return literal(pol, TupleTerm{std::move(atoms)});
}
Name nm(const char* t) { return Name{t}; }
Variable vr(const char* t) { return Variable{t}; }
}  // namespace

TEST_CASE("freeVars") {
  CHECK(freeVars(unit()).empty());

  Process p = exists(vr("x"), lit(Polarity::Consume, {vr("x"), vr("y")}));
  CHECK(freeVars(p) == std::set<Variable>{vr("y")});

  Process q = par(lit(Polarity::Stored, {nm("a"), vr("x")}),
                  exists(vr("x"), lit(Polarity::Consume, {vr("x")})));
  CHECK(freeVars(q) == std::set<Variable>{vr("x")});
}

TEST_CASE("substitute") {
  Process shadowed = exists(vr("x"), lit(Polarity::Consume, {vr("x")}));
  CHECK(sameTerm(substitute(shadowed, vr("x"), nm("a")), shadowed));

  Process p = seq(lit(Polarity::Consume, {vr("x"), nm("y")}),
                  lit(Polarity::Stored, {vr("x")}));
  Process expected = seq(lit(Polarity::Consume, {nm("tate"), nm("y")}),
                         lit(Polarity::Stored, {nm("tate")}));
  CHECK(sameTerm(substitute(p, vr("x"), nm("tate")), expected));

  // instantiation of the depiction update body before the interaction
  Process body =
      parseProcess("[mill depiction ?x] ; *[baltic depiction ?x]");
  Process inst = substitute(body, vr("x"), nm("photo"));
  CHECK(printProcess(inst) ==
        "[mill depiction photo] ; *[baltic depiction photo]");
}

TEST_CASE("classify") {
  CHECK(classify(parseProcess("*[sage type hall] | *[baltic type gallery]")) ==
        Grammar::Data);
  CHECK(classify(parseProcess("ex ?x.([?x type hall] | ([?x loc newcastle] + "
                              "[?x loc gateshead]))")) == Grammar::Query);
  CHECK(classify(parseProcess("#[d] ; *[e]")) == Grammar::System);
  CHECK(classify(parseProcess(
            "ex ?x.([mill depiction ?x] ; *[baltic depiction ?x])")) ==
        Grammar::Update);
  CHECK(classify(unit()) == Grammar::Data);
  // artefacts under choice sit outside all four sub-grammars
  CHECK(classify(parseProcess("#[d] + #[e]")) == Grammar::General);
}

TEST_CASE("classify admits the unit-law liftings") {
  // a bare query is an update up to Q = Q;1, so mixed parallel states at
  // mid-execution stay inside System
  CHECK(classify(parseProcess("[d]")) == Grammar::Query);
  CHECK(classify(parseProcess("*[d] | [d]")) == Grammar::System);
  std::string mid =
      "([turner location tate] | *[turner location tate] | *[turner location "
      "london] | [turner location london]) ; (((*[turner location baltic] | "
      "[turner location baltic]) ; *[turner location tate]) | *[turner "
      "location uk])";
  CHECK(classify(parseProcess(mid)) == Grammar::System);
}

TEST_CASE("groundNames") {
  CHECK(groundNames(unit()).empty());
  auto names = groundNames(parseProcess("*[a b] | [c]"));
  CHECK(names == std::set<Name>{nm("a"), nm("b"), nm("c")});

  Process turner = parseProcess(
      "*[turner location london] | *[turner location tate] | ([turner "
      "location tate] | [turner location london]) ; (*[turner location "
      "baltic] | *[turner location uk]) | ([turner location baltic] ; "
      "*[turner location tate])");
  CHECK(groundNames(turner) ==
        std::set<Name>{nm("turner"), nm("location"), nm("tate"), nm("london"),
                       nm("baltic"), nm("uk")});
}

TEST_CASE("substitution interacts with the free-variable set") {
  Process p = par(lit(Polarity::Consume, {vr("x"), vr("z")}),
                  exists(vr("y"), lit(Polarity::Stored, {vr("y"), vr("x")})));
  auto before = freeVars(p);
  CHECK(before == std::set<Variable>{vr("x"), vr("z")});
  auto after = freeVars(substitute(p, vr("x"), nm("a")));
  CHECK(after == std::set<Variable>{vr("z")});
}

TEST_CASE("total valuation grounds every literal") {
  Process p = parseProcess("ex ?x.([?x ?y] ; *[?x])");
  Valuation v(Name{"fallback"});
  const auto* e = as<ExistsP>(p);
  REQUIRE(e != nullptr);
  Process grounded = e->body;
  for (const Variable& x : freeVars(e->body))
    grounded = substitute(grounded, x, v(x));
  CHECK(isGround(grounded));
}

TEST_CASE("valuation override") {
  Valuation v(Name{"dflt"});
  CHECK(v(vr("x")).text == "dflt");
  Valuation w = v.extended(vr("x"), nm("a"));
  CHECK(w(vr("x")).text == "a");
  CHECK(w(vr("y")).text == "dflt");
  Valuation bare;
  CHECK_THROWS_AS(bare(vr("x")), UnboundVariable);
}

TEST_CASE("tidyUnits") {
  Process p = parseProcess("(1 ; [d]) | 1");
  CHECK(printProcess(tidyUnits(p)) == "[d]");
  CHECK(sameTerm(tidyUnits(parseProcess("ex ?x.1")), unit()));
}
