#include <doctest.h>

#include "cubical/driver.hpp"
#include "cubical/errors.hpp"
#include "cubical/nbe.hpp"

using namespace cubical;

namespace {

struct Fixture {
    Globals globals;
    Ctx ctx = empty_ctx(globals);

    TypePtr type(const char* src) { return check_ty(ctx, surface::parse_expr(src)); }
    TermPtr term(const char* src, const TypePtr& a) { return check(ctx, surface::parse_expr(src), ctx.eval_ty(a)); }
    std::string nf(const char* src, const char* a) {
        TypePtr t = type(a);
        return serialize(nbe_tm(ctx.cx, t, term(src, t)));
    }
};

std::string samples_dir() { return CUBICAL_SAMPLES_DIR; }

} // namespace

TEST_CASE("checking examples") {
    Fixture f;
    CHECK_NOTHROW(f.term("<i> loop i", f.type("Path (_. S1) base base")));

    Fixture g;
    g.ctx = g.ctx.extend_dim("j");
    CHECK_THROWS_AS(g.term("<i> base", g.type("Path (_. S1) base (loop j)")), BoundaryError);

    Fixture h;
    h.ctx = h.ctx.extend_term("x", tyval::s1());
    auto [t, a] = infer(h.ctx, surface::parse_expr("x"));
    CHECK(to_sexpr(t) == to_sexpr(tm::var(0)));
    CHECK(std::holds_alternative<TyVal::S1>(a->node));
}

TEST_CASE("equal_tm examples") {
    Fixture f;
    auto s1 = f.type("S1");
    CHECK(equal_tm(f.ctx, s1, f.term("base", s1), f.term("hcom 0 0 [0 = 1] S1 (i. [i = 0 -> base])", s1)));

    Fixture g;
    auto fty = g.type("S1 -> S1");
    g.ctx = g.ctx.extend_term("f", g.ctx.eval_ty(fty));
    CHECK(equal_tm(g.ctx, fty, g.term("f", fty), g.term("\\x -> f x", fty)));

    Fixture h;
    h.ctx = h.ctx.extend_dim("j");
    CHECK_FALSE(equal_tm(h.ctx, s1, h.term("base", s1), h.term("loop j", s1)));
}

TEST_CASE("injective_pi examples") {
    Fixture f;
    f.globals.types["Endo"] = f.type("S1 -> S1");
    auto a = f.type("(x : S1) -> S1");
    auto pc = injective_pi(f.ctx, a, f.type("Endo"));
    REQUIRE(pc.has_value());
    CHECK(serialize(pc->dom.first) == serialize(pc->dom.second));
    CHECK(serialize(pc->cod.first) == serialize(pc->cod.second));
    CHECK_THROWS_AS(injective_pi(f.ctx, a, f.type("S1 * S1")), NotAPi);
}

TEST_CASE("injective_pi unwraps a total glue type") {
    Session s;
    s.load(read_file(samples_dir() + "/glue.ctt"));
    Ctx ctx = empty_ctx(s.globals);
    auto glued = check_ty(ctx, surface::parse_expr("Glue [1 = 1 -> (Endo, idEquivEndo)] (S1 -> S1)"));
    auto pc = injective_pi(ctx, glued, check_ty(ctx, surface::parse_expr("Endo")));
    REQUIRE(pc.has_value());
    CHECK(serialize(pc->dom.first) == "s1");
    CHECK(serialize(pc->cod.second) == "s1");
}

TEST_CASE("side conditions") {
    Fixture f;
    auto s1 = f.type("S1");
    f.ctx = f.ctx.extend_dim("j");
    // uncovered system
    CHECK_THROWS_AS(f.term("hcom 0 1 [j = 0] S1 (k. [k = 0 -> base])", s1), CoverageError);
    // disagreeing branches
    CHECK_THROWS_AS(f.term("[j = 0 -> base | j = 0 \\/ j = 1 -> loop j]", s1), TypeError);
    // loop case endpoints must match the base case
    CHECK_THROWS_AS(f.term("ind-S1 (_. S1) base (i. loop j) base", s1), BoundaryError);
    CHECK_NOTHROW(f.term("ind-S1 (_. S1) base (i. loop i) (loop j)", s1));
    // dimensions are not terms
    CHECK_THROWS_AS(f.term("j", s1), ScopeError);
}

TEST_CASE("cofibration hypotheses split declarations") {
    Session s;
    s.load("def p (i j : I) [i = 0 \\/ j = 1] : S1 = loop i");
    auto out = normalize_decl(s, "p", Emit::Nf);
    REQUIRE(out.size() == 2);
    CHECK(out[0] == "[i = 0] base");
    CHECK(out[1] == "[j = 1] (loop #1)");
    CHECK_THROWS_AS(s.load("def q : S1 = p"), ScopeError);
}

TEST_CASE("driver commands") {
    Session s;
    s.load("def a : S1 = base\n"
           "def b : S1 = hcom 0 0 [0 = 1] S1 (i. [i = 0 -> base])\n"
           "def c (j : I) : S1 = loop j\n"
           "def d (j : I) : S1 = base\n"
           "def eta : ((x : S1) -> S1) -> (x : S1) -> S1 = \\f -> f\n");
    CHECK(eq_decls(s, "a", "b"));
    CHECK_FALSE(eq_decls(s, "c", "d"));
    CHECK_THROWS_AS(eq_decls(s, "a", "c"), TypeError);
    CHECK(normalize_decl(s, "eta", Emit::Surface) == std::vector<std::string>{"\\f -> \\x -> f x"});
    CHECK(cof_entails("i = 0 /\\ i = 1", "0 = 1"));
    CHECK_FALSE(cof_entails("i = 0", "forall j. j = 0"));

    Session bad;
    try {
        bad.load("def p : Path (_. S1) base base = <i> hcom 0 1 [0 = 1] S1 (k. [k = 0 -> base])");
        FAIL("expected a boundary error");
    } catch (const BoundaryError& e) {
        CHECK(exit_code_for(e) == kTypeError);
        CHECK(format_error("f.ctt", e).find("f.ctt:1:") == 0);
    }
}

// Core syntax keeps no ascriptions, so a redex that needed one (unglue of
// an ascribed glue) prints without it and cannot be inferred again. Normal
// forms contain no such redexes.
bool needs_ascription(const std::string& name) { return name == "glue_beta"; }

TEST_CASE("parse and print round trip on the samples") {
    for (const char* file : {"basics.ctt", "glue.ctt"}) {
        Session s;
        s.load(read_file(samples_dir() + "/" + file));
        for (const auto& name : s.order) {
            const CheckedDecl& d = s.get(name);
            for (const auto& b : d.branches) {
                CAPTURE(name);
                TypePtr t2 = check_ty(b.ctx, surface::parse_expr(surface::print(b.type, b.ctx.names)));
                CHECK(to_sexpr(t2) == to_sexpr(b.type));
                if (d.is_type) continue;
                TyValue a = b.ctx.eval_ty(b.type);
                if (!needs_ascription(name)) {
                    TermPtr e2 = check(b.ctx, surface::parse_expr(surface::print(b.term, b.ctx.names)), a);
                    CHECK(to_sexpr(e2) == to_sexpr(b.term));
                }
                NfPtr nf = nbe_tm(b.ctx.cx, b.type, b.term);
                TermPtr n2 = check(b.ctx, surface::parse_expr(surface::print(embed(nf), b.ctx.names)), a);
                CHECK(serialize(nbe_tm(b.ctx.cx, b.type, n2)) == serialize(nf));
            }
        }
    }
}
