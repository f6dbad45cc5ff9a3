#include <doctest.h>

#include <random>

#include "cof_oracle.hpp"
#include "cubical/cof.hpp"

using namespace cubical;

namespace {

Dim ix(int k) { return Dim::var_of(k); }

Cof dnf(int n, const CofibPtr& c) {
    return to_dnf(c, [n](int k) { return Dim::var_of(n - 1 - k); }, n);
}

bool solver_entails(int n, const CofibPtr& hyp, const CofibPtr& goal) {
    return entails(Congruence{}, dnf(n, hyp), dnf(n, goal));
}

CofibPtr random_cofib(std::mt19937& rng, int n, int depth, int& foralls) {
    std::uniform_int_distribution<int> pick(0, 5);
    int k = depth == 0 ? 0 : pick(rng);
    auto dim = [&] {
        std::uniform_int_distribution<int> d(0, n + 1);
        int v = d(rng);
        if (v == 0) return Dim::zero();
        if (v == 1) return Dim::one();
        return Dim::var_of(v - 2);
    };
    switch (k) {
    case 0:
    case 1: return cubical::cof_eq(dim(), dim());
    case 2:
    case 3: return cof_and(random_cofib(rng, n, depth - 1, foralls), random_cofib(rng, n, depth - 1, foralls));
    case 4: return cof_or(random_cofib(rng, n, depth - 1, foralls), random_cofib(rng, n, depth - 1, foralls));
    default:
        if (foralls == 0) return cof_or(random_cofib(rng, n, depth - 1, foralls), random_cofib(rng, n, depth - 1, foralls));
        --foralls;
        return cof_forall(random_cofib(rng, n + 1, depth - 1, foralls));
    }
}

} // namespace

TEST_CASE("congruence representatives prefer constants and older variables") {
    Congruence c;
    c.merge(Dim::var_of(3), Dim::var_of(1));
    CHECK(c.rep(Dim::var_of(3)) == Dim::var_of(1));
    c.merge(Dim::var_of(1), Dim::one());
    CHECK(c.rep(Dim::var_of(3)) == Dim::one());
    CHECK(c.consistent());
    c.merge(Dim::var_of(2), Dim::zero());
    c.merge(Dim::var_of(2), Dim::var_of(3));
    CHECK_FALSE(c.consistent());
}

TEST_CASE("to_dnf") {
    SUBCASE("boundary splits in two") {
        Cof d = dnf(1, partial_boundary(ix(0)));
        REQUIRE(d.branches.size() == 2);
        CHECK(d == cof::join(cof::eq(Dim::var_of(0), Dim::zero()), cof::eq(Dim::var_of(0), Dim::one())));
    }
    SUBCASE("contradictory conjunction is false") {
        CHECK(dnf(1, cof_and(cubical::cof_eq(ix(0), Dim::zero()), cubical::cof_eq(ix(0), Dim::one()))).is_bot());
    }
    SUBCASE("forall k. k = j is false") {
        CHECK(dnf(2, cof_forall(cubical::cof_eq(ix(0), ix(1)))).is_bot());
    }
    SUBCASE("forall k. k = 0 \\/ k = 1 is false") {
        CHECK(dnf(2, cof_forall(partial_boundary(ix(0)))).is_bot());
    }
    SUBCASE("forall keeps branches that ignore the bound variable") {
        auto c = cof_forall(cof_or(cubical::cof_eq(ix(0), Dim::zero()), cubical::cof_eq(ix(1), Dim::one())));
        CHECK(dnf(1, c) == cof::eq(Dim::var_of(0), Dim::one()));
    }
    SUBCASE("top and bot") {
        CHECK(dnf(0, cof_top()).is_top());
        CHECK(dnf(0, cof_bot()).is_bot());
    }
}

TEST_CASE("entails examples") {
    CHECK(solver_entails(1, cof_and(cubical::cof_eq(ix(0), Dim::zero()), cubical::cof_eq(ix(0), Dim::one())), cof_bot()));
    CHECK_FALSE(solver_entails(1, partial_boundary(ix(0)), cubical::cof_eq(ix(0), Dim::zero())));
    // context i, j: i has index 1, j index 0
    CHECK(solver_entails(2, cof_and(cubical::cof_eq(ix(1), ix(0)), cubical::cof_eq(ix(0), Dim::zero())),
                         cubical::cof_eq(ix(1), Dim::zero())));
    CHECK_FALSE(solver_entails(0, cof_top(), cof_bot()));
    CHECK(solver_entails(0, cof_top(), partial_boundary(Dim::one())));
}

TEST_CASE("relative canonical form") {
    Congruence cx;
    cx.merge(Dim::var_of(1), Dim::var_of(0));
    // under i1 = i0, (i1 = 0) and (i0 = 0) coincide
    Cof a = relative(cx, cof::eq(Dim::var_of(1), Dim::zero()));
    Cof b = relative(cx, cof::eq(Dim::var_of(0), Dim::zero()));
    CHECK(a == b);
    CHECK(relative(cx, cof::eq(Dim::var_of(1), Dim::var_of(0))).is_top());
    // subsumption relative to the context
    Cof c = relative(cx, cof::join(cof::eq(Dim::var_of(1), Dim::zero()),
                                   cof::meet(cof::eq(Dim::var_of(0), Dim::zero()), cof::eq(Dim::var_of(2), Dim::one()))));
    CHECK(c == a);
}

TEST_CASE("left inversion via split") {
    // context j (level 0), i (level 1); i = 0 \/ i = j
    Cof c = cof::join(cof::eq(Dim::var_of(1), Dim::zero()), cof::eq(Dim::var_of(1), Dim::var_of(0)));
    auto branches = split(Congruence{}, c);
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].second.rep(Dim::var_of(1)) == Dim::zero());
    CHECK(branches[1].second.rep(Dim::var_of(1)) == Dim::var_of(0));
    CHECK(split(Congruence{}, cof::eq(Dim::zero(), Dim::one())).empty());
    CHECK(split(Congruence{}, cof::top()).size() == 1);
}

TEST_CASE("solver agrees with the brute-force oracle") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 400; ++trial) {
        int n = trial % 4;
        int fh = 1, fg = 1;
        auto hyp = random_cofib(rng, n, 3, fh);
        auto goal = random_cofib(rng, n, 3, fg);
        INFO("hyp = " << to_sexpr(hyp) << ", goal = " << to_sexpr(goal));
        CHECK(solver_entails(n, hyp, goal) == oracle::entails(n, hyp, goal));
    }
}
