#include "cubical/kan.hpp"

#include "cubical/errors.hpp"

namespace cubical {

namespace {

Value const_plam(const Value& v) {
    return val::plam([v](const Cx&, Dim) { return v; }, "_");
}

template <class T>
T head_at(const Cx& cx, const TyDimClosure& line, Dim k) {
    TyValue t = whnf_ty(cx, line(cx, k));
    if (auto* x = std::get_if<T>(&t->node)) return *x;
    throw KanError("coercion along a line whose head changes");
}

/// Glue components at a point, without collapsing the glue type.
TyVal::Glue glue_at(const Cx& cx, const TyDimClosure& line, Dim k) {
    TyValue t = line(cx, k);
    if (auto* g = std::get_if<TyVal::Glue>(&t->node)) return *g;
    throw KanError("coercion along a line that is only partially a glue type");
}

Value hcom_glue(const Cx& cx, const TyVal::Glue& g, Dim r, Dim s, const Cof& phi, const DimClosure& tube) {
    Thunk part = [g, r, s, phi, tube](const Cx& c) { return do_hcom(c, g.part(c), r, s, phi, tube); };
    DimClosure base_tube = [g, r, phi, tube](const Cx& c, Dim k) -> Value {
        if (c.entails_eq(k, r) || c.entails(phi)) return do_unglue(c, g.phi, g.equiv, tube(c, k));
        if (c.entails(g.phi))
            return do_app(c, do_fst(c, g.equiv(c)), do_hcom(c, g.part(c), r, k, phi, tube));
        throw SystemCoverageError("glue composition tube forced off its cofibration");
    };
    Value total = do_hcom(cx, g.base, r, s, cof::join(phi, g.phi), base_tube);
    return mk_englue(cx, g.phi, part, total);
}

Value coe_glue(const Cx& cx, const TyDimClosure& line, Dim r, Dim s, const Value& v) {
    int x = cx.size();
    Cx cxx = cx.extend_dim();
    // The glue cofibration holding at every point of the line.
    Cof everywhere;
    for (const auto& b : glue_at(cxx, line, Dim::var_of(x)).phi.branches)
        if (!mentions(b, x)) everywhere.branches.push_back(b);

    TyDimClosure part_line = [line](const Cx& c, Dim k) { return glue_at(c, line, k).part(c); };
    TyDimClosure base_line = [line](const Cx& c, Dim k) { return glue_at(c, line, k).base; };

    auto part_at = [part_line, r, v](const Cx& c, Dim k) { return do_coe(c, part_line, r, k, v); };
    auto base_at = [line, base_line, part_at, everywhere, r, v](const Cx& c, Dim k) {
        DimClosure tube = [line, part_at, everywhere, r, v](const Cx& c2, Dim y) -> Value {
            if (c2.entails_eq(y, r)) {
                TyVal::Glue g = glue_at(c2, line, r);
                return do_unglue(c2, g.phi, g.equiv, v);
            }
            if (c2.entails(everywhere)) {
                TyVal::Glue g = glue_at(c2, line, y);
                return do_app(c2, do_fst(c2, g.equiv(c2)), part_at(c2, y));
            }
            throw SystemCoverageError("glue coercion tube forced off its cofibration");
        };
        return do_com(c, base_line, r, k, everywhere, tube);
    };

    TyVal::Glue target = glue_at(cx, line, s);
    Value b_s = base_at(cx, s);
    Cof fixed = cof::join(everywhere, cof::eq(r, s));

    // Under the target cofibration: the contracted fiber of the equivalence
    // over b_s, pinned to the known preimage where one exists.
    auto fiber_at = [target, b_s, fixed, part_at, r, s, v](const Cx& c) {
        Value equiv = target.equiv(c);
        TyValue fib = fiber_type(target.part(c), target.base, do_fst(c, equiv), b_s);
        Value contr = do_app(c, do_snd(c, equiv), b_s);
        Thunk known = [part_at, b_s, r, s, v](const Cx& c2) -> Value {
            if (c2.entails_eq(r, s)) return val::pair(v, const_plam(b_s));
            return val::pair(part_at(c2, s), const_plam(b_s));
        };
        DimClosure tube = [contr, fixed, known](const Cx& c2, Dim j) -> Value {
            if (c2.entails_eq(j, Dim::zero())) return do_fst(c2, contr);
            if (c2.entails(fixed)) return do_papp(c2, do_app(c2, do_snd(c2, contr), known(c2)), j);
            throw SystemCoverageError("fiber tube forced off its cofibration");
        };
        return do_hcom(c, fib, Dim::zero(), Dim::one(), fixed, tube);
    };

    DimClosure fix_tube = [target, b_s, fiber_at, r, s](const Cx& c, Dim j) -> Value {
        if (c.entails_eq(j, Dim::one())) return b_s;
        if (c.entails(target.phi)) return do_papp(c, do_snd(c, fiber_at(c)), j);
        if (c.entails_eq(r, s)) return b_s;
        throw SystemCoverageError("glue coercion cap forced off its cofibration");
    };
    Value total = do_hcom(cx, target.base, Dim::one(), Dim::zero(), cof::join(target.phi, cof::eq(r, s)), fix_tube);
    return mk_englue(cx, target.phi, [fiber_at](const Cx& c) { return do_fst(c, fiber_at(c)); }, total);
}

} // namespace

Value do_hcom(const Cx& cx, const TyValue& a, Dim r, Dim s, const Cof& phi, const DimClosure& tube) {
    if (cx.entails_eq(r, s) || cx.entails(phi)) return tube(cx, s);
    TyValue ty = whnf_ty(cx, a);
    return std::visit(
        [&](const auto& t) -> Value {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TyVal::S1>) {
                return mk_fhcom(cx, r, s, phi, tube);
            } else if constexpr (std::is_same_v<T, TyVal::Pi>) {
                return val::lam(
                    [t, r, s, phi, tube](const Cx& c, const Value& x) {
                        DimClosure tx = [tube, x](const Cx& c2, Dim i) { return do_app(c2, tube(c2, i), x); };
                        return do_hcom(c, t.cod(c, x), r, s, phi, tx);
                    },
                    t.name);
            } else if constexpr (std::is_same_v<T, TyVal::Sigma>) {
                DimClosure fst_tube = [tube](const Cx& c, Dim i) { return do_fst(c, tube(c, i)); };
                auto filler = [t, r, phi, fst_tube](const Cx& c, Dim k) {
                    return do_hcom(c, t.dom, r, k, phi, fst_tube);
                };
                TyDimClosure snd_line = [t, filler](const Cx& c, Dim k) { return t.cod(c, filler(c, k)); };
                DimClosure snd_tube = [tube](const Cx& c, Dim i) { return do_snd(c, tube(c, i)); };
                return val::pair(filler(cx, s), do_com(cx, snd_line, r, s, phi, snd_tube));
            } else if constexpr (std::is_same_v<T, TyVal::Path>) {
                return val::plam(
                    [t, r, s, phi, tube](const Cx& c, Dim i) {
                        DimClosure ti = [t, r, phi, tube, i](const Cx& c2, Dim k) -> Value {
                            if (c2.entails_eq(k, r) || c2.entails(phi)) return do_papp(c2, tube(c2, k), i);
                            if (c2.entails_eq(i, Dim::zero())) return t.a0;
                            if (c2.entails_eq(i, Dim::one())) return t.a1;
                            throw SystemCoverageError("path composition tube forced off its cofibration");
                        };
                        return do_hcom(c, t.line(c, i), r, s, cof::join(phi, cof::boundary(i)), ti);
                    },
                    t.name);
            } else {
                return hcom_glue(cx, t, r, s, phi, tube);
            }
        },
        ty->node);
}

Value do_coe(const Cx& cx, const TyDimClosure& line, Dim r, Dim s, const Value& v) {
    if (cx.entails_eq(r, s)) return v;
    Dim x = cx.fresh_dim();
    Cx cxx = cx.extend_dim();
    TyValue generic = whnf_ty(cxx, line(cxx, x));
    return std::visit(
        [&](const auto& t) -> Value {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TyVal::S1>) {
                return v;
            } else if constexpr (std::is_same_v<T, TyVal::Pi>) {
                TyDimClosure dom_line = [line](const Cx& c, Dim k) { return head_at<TyVal::Pi>(c, line, k).dom; };
                return val::lam(
                    [line, dom_line, r, s, v](const Cx& c, const Value& a) {
                        TyDimClosure cod_line = [line, dom_line, s, a](const Cx& c2, Dim k) {
                            return head_at<TyVal::Pi>(c2, line, k).cod(c2, do_coe(c2, dom_line, s, k, a));
                        };
                        return do_coe(c, cod_line, r, s, do_app(c, v, do_coe(c, dom_line, s, r, a)));
                    },
                    t.name);
            } else if constexpr (std::is_same_v<T, TyVal::Sigma>) {
                TyDimClosure dom_line = [line](const Cx& c, Dim k) { return head_at<TyVal::Sigma>(c, line, k).dom; };
                auto filler = [dom_line, r, v](const Cx& c, Dim k) { return do_coe(c, dom_line, r, k, do_fst(c, v)); };
                TyDimClosure cod_line = [line, filler](const Cx& c, Dim k) {
                    return head_at<TyVal::Sigma>(c, line, k).cod(c, filler(c, k));
                };
                return val::pair(filler(cx, s), do_coe(cx, cod_line, r, s, do_snd(cx, v)));
            } else if constexpr (std::is_same_v<T, TyVal::Path>) {
                return val::plam(
                    [line, r, s, v](const Cx& c, Dim j) {
                        TyDimClosure l = [line, j](const Cx& c2, Dim k) {
                            return head_at<TyVal::Path>(c2, line, k).line(c2, j);
                        };
                        DimClosure tube = [line, r, v, j](const Cx& c2, Dim k) -> Value {
                            if (c2.entails_eq(k, r)) return do_papp(c2, v, j);
                            if (c2.entails_eq(j, Dim::zero())) return head_at<TyVal::Path>(c2, line, k).a0;
                            if (c2.entails_eq(j, Dim::one())) return head_at<TyVal::Path>(c2, line, k).a1;
                            throw SystemCoverageError("path coercion tube forced off its cofibration");
                        };
                        return do_com(c, l, r, s, cof::boundary(j), tube);
                    },
                    t.name);
            } else {
                return coe_glue(cx, line, r, s, v);
            }
        },
        generic->node);
}

Value do_com(const Cx& cx, const TyDimClosure& line, Dim r, Dim s, const Cof& phi, const DimClosure& tube) {
    DimClosure coerced = [line, s, tube](const Cx& c, Dim i) { return do_coe(c, line, i, s, tube(c, i)); };
    return do_hcom(cx, line(cx, s), r, s, phi, coerced);
}

} // namespace cubical
