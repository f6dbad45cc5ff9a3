#include <doctest.h>

#include "cubical/errors.hpp"
#include "cubical/syntax.hpp"

using namespace cubical;

TEST_CASE("subst_dim") {
    SUBCASE("loop at a substituted dimension") {
        // context i; loop(i)[0/i]
        CHECK(alpha_equal(subst_dim(tm::loop(Dim::var_of(0)), 0, Dim::zero()), tm::loop(Dim::zero())));
    }
    SUBCASE("boundary renames homomorphically") {
        // context j, i; (∂i)[j/i] where j has index 0 after removing i
        auto c = subst_dim(partial_boundary(Dim::var_of(0)), 0, Dim::var_of(0));
        CHECK(to_sexpr(c) == to_sexpr(partial_boundary(Dim::var_of(0))));
    }
    SUBCASE("binders are respected") {
        // context x, i; <k> p @ i where the body refers to i at index 1
        auto t = tm::plam(tm::papp(tm::var(2), Dim::var_of(1)));
        auto u = subst_dim(t, 0, Dim::one());
        CHECK(alpha_equal(u, tm::plam(tm::papp(tm::var(1), Dim::one()))));
    }
    SUBCASE("later variables shift down") {
        auto t = tm::papp(tm::var(1), Dim::var_of(2));
        auto u = subst_dim(t, 0, Dim::zero());
        CHECK(alpha_equal(u, tm::papp(tm::var(0), Dim::var_of(1))));
    }
}

TEST_CASE("scope_check") {
    ScopeKinds ctx{EntryKind::Term, EntryKind::Dim};
    CHECK_NOTHROW(scope_check(ctx, tm::papp(tm::var(1), Dim::var_of(0))));
    CHECK_THROWS_AS(scope_check(ctx, tm::var(0)), ScopeError);
    CHECK_THROWS_AS(scope_check(ctx, tm::loop(Dim::var_of(1))), ScopeError);
    CHECK_THROWS_AS(scope_check(ctx, tm::var(2)), ScopeError);
    CHECK_NOTHROW(scope_check(ctx, tm::lam(tm::var(0))));
    CHECK_NOTHROW(scope_check(ScopeKinds{}, cof_forall(cof_eq(Dim::var_of(0), Dim::zero()))));
}

TEST_CASE("shift") {
    auto t = tm::lam(tm::app(tm::var(0), tm::var(1)));
    CHECK(alpha_equal(shift(t, 2), tm::lam(tm::app(tm::var(0), tm::var(3)))));
}
