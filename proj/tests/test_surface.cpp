#include <doctest.h>

#include "cubical/driver.hpp"
#include "cubical/nbe.hpp"
#include "cubical/surface.hpp"

using namespace cubical;
using namespace cubical::surface;

TEST_CASE("parser examples") {
    CHECK(std::holds_alternative<SExpr::Base>(parse_expr("base")->node));

    auto p = parse_expr("<i> loop i");
    auto* pl = std::get_if<SExpr::PLam>(&p->node);
    REQUIRE(pl);
    CHECK(pl->name == "i");
    auto* lp = std::get_if<SExpr::Loop>(&pl->body->node);
    REQUIRE(lp);
    CHECK(lp->r.name == "i");

    auto c = parse_expr("coe (i. S1) 0 1 base");
    auto* coe = std::get_if<SExpr::Coe>(&c->node);
    REQUIRE(coe);
    CHECK(coe->r.kind == SDim::Kind::Zero);
    CHECK(coe->s.kind == SDim::Kind::One);
    CHECK(std::holds_alternative<SExpr::S1>(coe->line->node));
}

TEST_CASE("parser precedence") {
    // postfix binds tighter than application
    auto e = parse_expr("x @ 0 base");
    auto* app = std::get_if<SExpr::App>(&e->node);
    REQUIRE(app);
    CHECK(std::holds_alternative<SExpr::PApp>(app->fn->node));

    auto t = parse_expr("(x : S1) -> S1 * S1");
    auto* pi = std::get_if<SExpr::Pi>(&t->node);
    REQUIRE(pi);
    CHECK(pi->name == "x");
    CHECK(std::holds_alternative<SExpr::Sigma>(pi->cod->node));

    auto ann = parse_expr("(f : S1 -> S1) base");
    CHECK(std::holds_alternative<SExpr::App>(ann->node));

    auto cof = parse_cof("i = 0 \\/ j = 1 /\\ forall k. k = i");
    CHECK(std::holds_alternative<SCof::Or>(cof->node));
    CHECK(free_dims(cof) == std::vector<std::string>{"i", "j"});
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_file("def x : S1 =\n  (base");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.span().line == 2);
    }
    CHECK_THROWS_AS(parse_expr("loop 2"), ParseError);
    CHECK_THROWS_AS(parse_expr("\\base -> base"), ParseError);
}

TEST_CASE("comments are skipped") {
    auto ds = parse_file("-- a comment\ndef a : S1 = base -- trailing\n");
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].name == "a");
}

TEST_CASE("printer freshens names") {
    auto t = tm::lam(tm::lam(tm::app(tm::var(1), tm::var(0)), "x"), "x");
    CHECK(print(t, {}) == "\\x -> \\x1 -> x x1");
    CHECK(print(ty::pi(ty::s1(), ty::s1()), {}) == "S1 -> S1");
    CHECK(print(ty::path(ty::s1(), tm::base(), tm::loop(Dim::var_of(0)), "_"), {"j"}) == "Path (_. S1) base (loop j)");
    CHECK(print(cof_forall(cof_eq(Dim::var_of(0), Dim::var_of(1))), {"i"}) == "forall i1. i1 = i");
}
