#include <doctest.h>

#include "cubical/kan.hpp"
#include "cubical/nbe.hpp"

using namespace cubical;

namespace {

TypePtr loop_path() { return ty::path(ty::s1(), tm::base(), tm::base()); }

std::string nf(const Cx& cx, const TypePtr& a, const TermPtr& t) { return serialize(nbe_tm(cx, a, t)); }

} // namespace

TEST_CASE("basic evaluation") {
    Cx cx;
    CHECK(nf(cx, ty::s1(), tm::app(tm::lam(tm::var(0)), tm::base())) == "base");
    CHECK(nf(cx, ty::s1(), tm::papp(tm::plam(tm::loop(Dim::var_of(0))), Dim::one())) == "base");
    CHECK(nf(cx, loop_path(), tm::plam(tm::loop(Dim::var_of(0)))) == "(plam (loop #0))");
}

TEST_CASE("hcom boundary") {
    Cx cx;
    auto t = tm::hcom(ty::s1(), Dim::zero(), Dim::zero(), cof_bot(), tm::base());
    CHECK(nf(cx, ty::s1(), t) == "base");
}

TEST_CASE("fhcom cells") {
    Cx cx;
    auto t = tm::hcom(ty::s1(), Dim::zero(), Dim::one(), cof_bot(), tm::base());
    CHECK(nf(cx, ty::s1(), t) == "(fhcom 0 1 bot (sys ((= #0 0) base)))");
}

TEST_CASE("path variables") {
    Cx cx = Cx{}.extend_term(eval_ty(Cx{}, nullptr, loop_path()), "p");
    CHECK(nf(cx, ty::s1(), tm::papp(tm::var(0), Dim::zero())) == "base");
    Cx cxi = cx.extend_dim("i");
    CHECK(nf(cxi, ty::s1(), tm::papp(tm::var(1), Dim::var_of(0))) ==
          "(lift (or (= #0 0) (= #0 1)) (papp #1 #0) (sys ((= #0 0) base) ((= #0 1) base)))");
    // eta for paths
    CHECK(nf(cx, loop_path(), tm::var(0)) == nf(cx, loop_path(), tm::plam(tm::papp(tm::var(1), Dim::var_of(0)))));
}

TEST_CASE("pi eta and instability audit") {
    auto fty = ty::pi(ty::s1(), ty::s1());
    Cx cx = Cx{}.extend_term(eval_ty(Cx{}, nullptr, fty), "f");
    CHECK(nf(cx, fty, tm::var(0)) == "(lam (lift bot (app #1 (lift bot #0 (sys))) (sys)))");
    CHECK(nf(cx, fty, tm::var(0)) == nf(cx, fty, tm::lam(tm::app(tm::var(1), tm::var(0)))));
    CHECK_FALSE(audit(nbe_tm(cx, fty, tm::var(0)), cx.size(), cx.cong()).has_value());
}

TEST_CASE("circle induction") {
    Cx cx;
    auto motive = ty::s1();
    auto ind = [&](TermPtr scrut) {
        return tm::ind_s1(motive, tm::base(), tm::loop(Dim::var_of(0)), std::move(scrut));
    };
    CHECK(nf(cx, ty::s1(), ind(tm::base())) == "base");
    Cx cxi = cx.extend_dim();
    CHECK(nf(cxi, ty::s1(), ind(tm::loop(Dim::var_of(0)))) == "(loop #0)");
    Cx cxx = cx.extend_term(tyval::s1(), "x");
    CHECK(nf(cxx, ty::s1(), ind(tm::var(0))) ==
          "(lift bot (ind s1 base (loop #0) #0) (sys))");
}
