#include "gen.hpp"

#include <algorithm>
#include <functional>

namespace gen {

TypePtr syntax(const GTy& t, int depth, const TermPtr& id_equiv) {
    int up = depth - t.depth;
    switch (t.k) {
    case GTy::K::S1: return ty::s1();
    case GTy::K::Pi: return ty::pi(syntax(*t.a, depth, id_equiv), syntax(*t.b, depth + 1, id_equiv), "_");
    case GTy::K::Sigma: return ty::sigma(syntax(*t.a, depth, id_equiv), syntax(*t.b, depth + 1, id_equiv), "_");
    case GTy::K::Path: {
        TermPtr e = shift(t.end, up);
        return ty::path(syntax(*t.a, depth + 1, id_equiv), e, e, "_");
    }
    case GTy::K::Glue: return ty::glue(shift(t.phi, up), ty::s1(), ty::s1(), id_equiv);
    }
    return ty::s1();
}

GCtx GCtx::with_dim(const std::string& name) const {
    GCtx out{ctx.extend_dim(name), types};
    out.types.push_back(nullptr);
    return out;
}

GCtx GCtx::with_term(const std::string& name, const GTyPtr& t, const TermPtr& id_equiv) const {
    GCtx out{ctx.extend_term(name, ctx.eval_ty(syntax(*t, depth(), id_equiv))), types};
    out.types.push_back(t);
    return out;
}

namespace {

GTyPtr make(GTy t) { return std::make_shared<const GTy>(std::move(t)); }

} // namespace

Dim Gen::dim(const GCtx& g, int bound) {
    std::vector<Dim> choices{Dim::zero(), Dim::one()};
    for (int b = 0; b < bound; ++b) choices.push_back(Dim::var_of(b));
    for (int p = 0; p < g.depth(); ++p)
        if (!g.types[p]) choices.push_back(Dim::var_of(bound + g.depth() - 1 - p));
    return choices[pick(static_cast<int>(choices.size()))];
}

CofibPtr Gen::cof(const GCtx& g, int depth, int bound) {
    if (depth <= 0 || chance(0.4)) return cof_eq(dim(g, bound), dim(g, bound));
    switch (pick(3)) {
    case 0: return cof_and(cof(g, depth - 1, bound), cof(g, depth - 1, bound));
    case 1: return cof_or(cof(g, depth - 1, bound), cof(g, depth - 1, bound));
    default: return cof_forall(cof(g, depth - 1, bound + 1), "k" + std::to_string(bound));
    }
}

GTyPtr Gen::type(const GCtx& g, int fuel) {
    if (fuel <= 0) return make(GTy{GTy::K::S1, nullptr, nullptr, nullptr, nullptr, g.depth()});
    return type_of_kind(g, static_cast<GTy::K>(pick(kKinds)), fuel);
}

GTyPtr Gen::type_of_kind(const GCtx& g, GTy::K k, int fuel) {
    GTy t{k, nullptr, nullptr, nullptr, nullptr, g.depth()};
    switch (k) {
    case GTy::K::S1: break;
    case GTy::K::Pi:
    case GTy::K::Sigma:
        t.a = type(g, fuel - 1);
        t.b = type(g, fuel - 1);
        break;
    case GTy::K::Path:
        t.a = type(g, fuel - 1);
        t.end = term(g, t.a, std::max(fuel - 1, 0));
        break;
    case GTy::K::Glue: t.phi = cof(g, 1); break;
    }
    return make(std::move(t));
}

TermPtr Gen::intro(const GCtx& g, const GTyPtr& t, int fuel) {
    int d = g.depth();
    int sub = std::max(fuel - 1, 0);
    switch (t->k) {
    case GTy::K::S1: return chance(0.5) ? tm::base() : tm::loop(dim(g));
    case GTy::K::Pi: {
        std::string x = "x" + std::to_string(fresh_++);
        return tm::lam(term(g.with_term(x, t->a, id_equiv_), t->b, sub), x);
    }
    case GTy::K::Sigma: return tm::pair(term(g, t->a, sub), term(g, t->b, sub));
    case GTy::K::Path: {
        bool base_loop = t->a->k == GTy::K::S1 && std::holds_alternative<Term::Base>(t->end->node);
        if (base_loop && chance(0.5)) return tm::plam(tm::loop(Dim::var_of(0)), "k");
        return tm::plam(shift(t->end, d - t->depth + 1), "_");
    }
    case GTy::K::Glue: {
        TermPtr a = term(g, make(GTy{GTy::K::S1, nullptr, nullptr, nullptr, nullptr, d}), sub);
        return tm::englue(shift(t->phi, d - t->depth), a, a);
    }
    }
    return tm::base();
}

TermPtr Gen::term(const GCtx& g, const GTyPtr& t, int fuel) {
    int d = g.depth();
    std::string want = to_sexpr(syntax_of(*t, d));
    auto same = [&](const GTyPtr& u) { return to_sexpr(syntax_of(*u, d)) == want; };
    int sub = std::max(fuel - 1, 0);

    std::vector<std::function<TermPtr()>> options;
    options.emplace_back([&] { return intro(g, t, fuel); });
    for (int p = 0; p < d; ++p) {
        const GTyPtr& v = g.types[p];
        if (!v) continue;
        TermPtr x = tm::var(d - 1 - p);
        if (same(v)) options.emplace_back([x] { return x; });
        switch (v->k) {
        case GTy::K::Pi:
            if (same(v->b)) options.emplace_back([&, x, v] { return tm::app(x, term(g, v->a, sub)); });
            break;
        case GTy::K::Sigma:
            if (same(v->a)) options.emplace_back([x] { return tm::fst(x); });
            if (same(v->b)) options.emplace_back([x] { return tm::snd(x); });
            break;
        case GTy::K::Path:
            if (same(v->a)) options.emplace_back([&, x] { return tm::papp(x, dim(g)); });
            break;
        case GTy::K::Glue:
            if (t->k == GTy::K::S1)
                options.emplace_back([&, x, v] { return tm::unglue(shift(v->phi, d - v->depth), id_equiv_, x); });
            break;
        default: break;
        }
    }
    if (fuel > 0) {
        options.emplace_back([&] {
            Dim r = dim(g), s = dim(g);
            CofibPtr phi = cof(g, 1);
            TermPtr tube = term(g.with_dim("k"), t, sub);
            return tm::hcom(syntax_of(*t, d), r, s, phi, tube, "k");
        });
        options.emplace_back([&] {
            Dim r = dim(g), s = dim(g);
            return tm::coe(syntax_of(*t, d + 1), r, s, term(g, t, sub), "k");
        });
        options.emplace_back([&] {
            GTyPtr s1 = make(GTy{GTy::K::S1, nullptr, nullptr, nullptr, nullptr, d});
            TermPtr scrut = term(g, s1, sub);
            if (t->k == GTy::K::S1 && chance(0.5))
                return tm::ind_s1(ty::s1(), tm::base(), tm::loop(Dim::var_of(0)), scrut, "_", "k");
            TermPtr b = term(g, t, sub);
            return tm::ind_s1(syntax_of(*t, d + 1), b, shift(b, 1), scrut, "_", "k");
        });
    }
    return options[pick(static_cast<int>(options.size()))]();
}

GCtx Gen::context(const Globals& globals, int max_dims, int max_terms, int fuel) {
    int dims = pick(max_dims + 1);
    int terms = pick(max_terms + 1);
    std::vector<bool> kinds(dims, true);
    kinds.insert(kinds.end(), terms, false);
    std::shuffle(kinds.begin(), kinds.end(), rng_);
    GCtx g{empty_ctx(globals), {}};
    int ni = 0, nx = 0;
    for (bool is_dim : kinds) {
        if (is_dim)
            g = g.with_dim("i" + std::to_string(ni++));
        else
            g = g.with_term("y" + std::to_string(nx++), type(g, fuel), id_equiv_);
    }
    return g;
}

} // namespace gen
