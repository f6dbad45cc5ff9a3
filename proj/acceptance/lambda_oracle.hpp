#pragma once

// A small simply typed lambda calculus with pairs over one base type, and a
// beta-eta normalizer for it by capture-avoiding substitution. Normal forms
// are eta-long: every function is a lambda and every pair a pair.

#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubical/syntax.hpp"

namespace lam {

struct Ty;
struct Tm;
using TyP = std::shared_ptr<const Ty>;
using TmP = std::shared_ptr<const Tm>;

struct Ty {
    enum K { Base, Arr, Prod } k;
    TyP a, b;
};

struct Tm {
    enum K { Var, Lam, App, Pair, Fst, Snd, Pt } k;
    std::string name;  // Var, Lam
    TmP a, b;
};

inline TyP base_ty() { return std::make_shared<const Ty>(Ty{Ty::Base, nullptr, nullptr}); }
inline TyP arr(TyP a, TyP b) { return std::make_shared<const Ty>(Ty{Ty::Arr, std::move(a), std::move(b)}); }
inline TyP prod(TyP a, TyP b) { return std::make_shared<const Ty>(Ty{Ty::Prod, std::move(a), std::move(b)}); }

inline TmP mk(Tm::K k, std::string n = "", TmP a = nullptr, TmP b = nullptr) {
    return std::make_shared<const Tm>(Tm{k, std::move(n), std::move(a), std::move(b)});
}
inline TmP var(const std::string& x) { return mk(Tm::Var, x); }
inline TmP lambda(const std::string& x, TmP body) { return mk(Tm::Lam, x, std::move(body)); }
inline TmP app(TmP f, TmP a) { return mk(Tm::App, "", std::move(f), std::move(a)); }
inline TmP pair(TmP a, TmP b) { return mk(Tm::Pair, "", std::move(a), std::move(b)); }
inline TmP fst(TmP p) { return mk(Tm::Fst, "", std::move(p)); }
inline TmP snd(TmP p) { return mk(Tm::Snd, "", std::move(p)); }
inline TmP pt() { return mk(Tm::Pt); }

inline bool same_ty(const TyP& a, const TyP& b) {
    if (a->k != b->k) return false;
    if (a->k == Ty::Base) return true;
    return same_ty(a->a, b->a) && same_ty(a->b, b->b);
}

inline void free_vars(const TmP& t, std::set<std::string>& out, std::set<std::string>& bound) {
    switch (t->k) {
    case Tm::Var:
        if (!bound.count(t->name)) out.insert(t->name);
        return;
    case Tm::Lam: {
        bool had = bound.count(t->name) > 0;
        bound.insert(t->name);
        free_vars(t->a, out, bound);
        if (!had) bound.erase(t->name);
        return;
    }
    case Tm::Pt: return;
    default:
        free_vars(t->a, out, bound);
        if (t->b) free_vars(t->b, out, bound);
    }
}

inline std::set<std::string> free_vars(const TmP& t) {
    std::set<std::string> out, bound;
    free_vars(t, out, bound);
    return out;
}

class Normalizer {
public:
    using Scope = std::map<std::string, TyP>;

    /// t[x := s]
    TmP subst(const TmP& t, const std::string& x, const TmP& s) {
        switch (t->k) {
        case Tm::Var: return t->name == x ? s : t;
        case Tm::Pt: return t;
        case Tm::Lam: {
            if (t->name == x) return t;
            std::set<std::string> fv = free_vars(s);
            if (!fv.count(t->name)) return lambda(t->name, subst(t->a, x, s));
            std::string y = fresh();
            return lambda(y, subst(subst(t->a, t->name, var(y)), x, s));
        }
        default: return mk(t->k, "", subst(t->a, x, s), t->b ? subst(t->b, x, s) : nullptr);
        }
    }

    /// Weak head normal form.
    TmP whnf(const TmP& t) {
        switch (t->k) {
        case Tm::App: {
            TmP f = whnf(t->a);
            if (f->k == Tm::Lam) return whnf(subst(f->a, f->name, t->b));
            return app(f, t->b);
        }
        case Tm::Fst:
        case Tm::Snd: {
            TmP p = whnf(t->a);
            if (p->k == Tm::Pair) return whnf(t->k == Tm::Fst ? p->a : p->b);
            return mk(t->k, "", p);
        }
        default: return t;
        }
    }

    /// Eta-long beta normal form of `t : a`.
    TmP norm(const Scope& scope, const TmP& t, const TyP& a) {
        switch (a->k) {
        case Ty::Arr: {
            std::string x = fresh();
            Scope inner = scope;
            inner[x] = a->a;
            return lambda(x, norm(inner, app(t, var(x)), a->b));
        }
        case Ty::Prod: return pair(norm(scope, fst(t), a->a), norm(scope, snd(t), a->b));
        case Ty::Base: {
            TmP h = whnf(t);
            if (h->k == Tm::Pt) return h;
            return neutral(scope, h).first;
        }
        }
        return t;
    }

private:
    int counter_ = 0;
    std::string fresh() { return "_v" + std::to_string(counter_++); }

    std::pair<TmP, TyP> neutral(const Scope& scope, const TmP& h) {
        switch (h->k) {
        case Tm::Var: return {h, scope.at(h->name)};
        case Tm::App: {
            auto [f, fa] = neutral(scope, whnf(h->a));
            return {app(f, norm(scope, h->b, fa->a)), fa->b};
        }
        case Tm::Fst: {
            auto [p, pa] = neutral(scope, whnf(h->a));
            return {fst(p), pa->a};
        }
        case Tm::Snd: {
            auto [p, pa] = neutral(scope, whnf(h->a));
            return {snd(p), pa->b};
        }
        default: throw std::logic_error("not a neutral");
        }
    }
};

/// Translation into core syntax; `scope` lists the names of the enclosing
/// telescope, outermost first.
inline cubical::TermPtr to_core(const TmP& t, std::vector<std::string>& scope) {
    using namespace cubical;
    switch (t->k) {
    case Tm::Var:
        for (int k = static_cast<int>(scope.size()) - 1; k >= 0; --k)
            if (scope[k] == t->name) return tm::var(static_cast<int>(scope.size()) - 1 - k);
        throw std::logic_error("unbound " + t->name);
    case Tm::Lam: {
        scope.push_back(t->name);
        TermPtr body = to_core(t->a, scope);
        scope.pop_back();
        return tm::lam(body, t->name);
    }
    case Tm::App: return tm::app(to_core(t->a, scope), to_core(t->b, scope));
    case Tm::Pair: return tm::pair(to_core(t->a, scope), to_core(t->b, scope));
    case Tm::Fst: return tm::fst(to_core(t->a, scope));
    case Tm::Snd: return tm::snd(to_core(t->a, scope));
    case Tm::Pt: return tm::base();
    }
    return nullptr;
}

inline cubical::TypePtr to_core(const TyP& a) {
    using namespace cubical;
    switch (a->k) {
    case Ty::Base: return ty::s1();
    case Ty::Arr: return ty::pi(to_core(a->a), to_core(a->b), "_");
    case Ty::Prod: return ty::sigma(to_core(a->a), to_core(a->b), "_");
    }
    return nullptr;
}

/// Random well-typed terms, rich in beta redexes.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    TyP type(int fuel) {
        if (fuel <= 0 || pick(3) == 0) return base_ty();
        TyP a = type(fuel - 1), b = type(fuel - 1);
        return pick(2) ? arr(a, b) : prod(a, b);
    }

    TmP term(const std::vector<std::pair<std::string, TyP>>& scope, const TyP& a, int fuel) {
        std::vector<int> vars;
        for (int k = 0; k < static_cast<int>(scope.size()); ++k)
            if (same_ty(scope[k].second, a)) vars.push_back(k);
        int choice = fuel <= 0 ? 0 : pick(5);
        if (choice == 1 && !vars.empty()) return var(scope[vars[pick(static_cast<int>(vars.size()))]].first);
        if (choice == 2) {  // beta redex
            TyP b = type(1);
            std::string x = "x" + std::to_string(fresh_++);
            auto inner = scope;
            inner.emplace_back(x, b);
            return app(lambda(x, term(inner, a, fuel - 1)), term(scope, b, fuel - 1));
        }
        if (choice == 3) {  // projection
            TyP b = type(1);
            return pick(2) ? fst(term(scope, prod(a, b), fuel - 1)) : snd(term(scope, prod(b, a), fuel - 1));
        }
        if (choice == 4) {  // application of an arbitrary function
            TyP b = type(1);
            return app(term(scope, arr(b, a), fuel - 1), term(scope, b, fuel - 1));
        }
        switch (a->k) {
        case Ty::Base:
            if (!vars.empty() && pick(2)) return var(scope[vars[pick(static_cast<int>(vars.size()))]].first);
            return pt();
        case Ty::Arr: {
            std::string x = "x" + std::to_string(fresh_++);
            auto inner = scope;
            inner.emplace_back(x, a->a);
            return lambda(x, term(inner, a->b, fuel - 1));
        }
        case Ty::Prod: return pair(term(scope, a->a, fuel - 1), term(scope, a->b, fuel - 1));
        }
        return pt();
    }

private:
    std::mt19937 rng_;
    int fresh_ = 0;
};

} // namespace lam
