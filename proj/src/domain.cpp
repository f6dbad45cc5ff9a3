#include "cubical/domain.hpp"

#include "cubical/errors.hpp"
#include "cubical/kan.hpp"

namespace cubical {

namespace {

template <class T>
NeuPtr mkneu(T node) {
    return std::make_shared<Neu>(Neu{std::move(node)});
}

template <class T>
Value mkval(T node) {
    return std::make_shared<Val>(Val{std::move(node)});
}

template <class T>
TyValue mkty(T node) {
    return std::make_shared<TyVal>(TyVal{std::move(node)});
}

} // namespace

Cof instability(const Neu& n) {
    return std::visit(
        [](const auto& x) -> Cof {
            using N = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<N, Neu::Var>) {
                return cof::bot();
            } else if constexpr (std::is_same_v<N, Neu::App>) {
                return instability(*x.fn);
            } else if constexpr (std::is_same_v<N, Neu::Fst> || std::is_same_v<N, Neu::Snd>) {
                return instability(*x.pair);
            } else if constexpr (std::is_same_v<N, Neu::PApp>) {
                return cof::join(instability(*x.path), cof::boundary(x.r));
            } else if constexpr (std::is_same_v<N, Neu::Unglue>) {
                return cof::join(instability(*x.glue), std::get<TyVal::Glue>(x.glue_type->node).phi);
            } else {
                return instability(*x.scrut);
            }
        },
        n.node);
}

// ---------------------------------------------------------------------------
// Contexts and environments

Cx Cx::extend_dim(std::string name) const {
    Cx out = *this;
    out.entries_.push_back({true, nullptr, std::move(name)});
    return out;
}

Cx Cx::extend_term(TyValue type, std::string name) const {
    Cx out = *this;
    out.entries_.push_back({false, std::move(type), std::move(name)});
    return out;
}

std::optional<Cx> Cx::assume(const Conj& c) const {
    auto cong = cubical::assume(cong_, c);
    if (!cong) return std::nullopt;
    Cx out = *this;
    out.cong_ = std::move(*cong);
    return out;
}

std::vector<std::pair<Conj, Cx>> Cx::split(const Cof& c) const {
    std::vector<std::pair<Conj, Cx>> out;
    for (const auto& b : canon(c).branches)
        if (auto ext = assume(b)) out.emplace_back(b, std::move(*ext));
    return out;
}

Dim Cx::dim_to_index(Dim d) const { return d.is_var() ? Dim::var_of(index_of(d.var)) : d; }

Env env_push(const Env& env, EnvEntry e) { return std::make_shared<EnvNode>(EnvNode{std::move(e), env}); }

const EnvEntry& env_lookup(const Env& env, int index) {
    const EnvNode* node = env.get();
    for (int k = 0; k < index && node; ++k) node = node->next.get();
    if (!node) throw DomainError("environment lookup out of range");
    return node->entry;
}

// ---------------------------------------------------------------------------
// Constructors

namespace val {
Value lam(ValClosure body, std::string name) { return mkval(Val::Lam{std::move(body), std::move(name)}); }
Value pair(Value a, Value b) { return mkval(Val::Pair{std::move(a), std::move(b)}); }
Value plam(DimClosure body, std::string name) { return mkval(Val::PLam{std::move(body), std::move(name)}); }
Value base() {
    static const Value b = mkval(Val::Base{});
    return b;
}
} // namespace val

namespace tyval {
TyValue s1() {
    static const TyValue t = mkty(TyVal::S1{});
    return t;
}
TyValue pi(TyValue dom, TyValClosure cod, std::string name) {
    return mkty(TyVal::Pi{std::move(dom), std::move(cod), std::move(name)});
}
TyValue sigma(TyValue dom, TyValClosure cod, std::string name) {
    return mkty(TyVal::Sigma{std::move(dom), std::move(cod), std::move(name)});
}
TyValue path(TyDimClosure line, Value a0, Value a1, std::string name) {
    return mkty(TyVal::Path{std::move(line), std::move(a0), std::move(a1), std::move(name)});
}
TyValue arrow(TyValue dom, TyValue cod) {
    return pi(std::move(dom), [cod](const Cx&, const Value&) { return cod; }, "_");
}
TyValue times(TyValue a, TyValue b) {
    return sigma(std::move(a), [b](const Cx&, const Value&) { return b; }, "_");
}
TyValue const_path(TyValue a, Value a0, Value a1) {
    return path([a](const Cx&, Dim) { return a; }, std::move(a0), std::move(a1), "_");
}
} // namespace tyval

TyValue whnf_ty(const Cx& cx, const TyValue& a) {
    TyValue cur = a;
    while (auto* g = std::get_if<TyVal::Glue>(&cur->node)) {
        if (!cx.entails(g->phi)) break;
        cur = g->part(cx);
    }
    return cur;
}

CutAudit& cut_audit() {
    static CutAudit audit;
    return audit;
}

namespace {
void audit_cut(const Cx& cx, const Val::Cut& c) {
    CutAudit& a = cut_audit();
    if (!a.active) return;
    ++a.checked;
    std::string problem;
    if (!equivalent(cx.cong(), c.phi, instability(*c.ne))) {
        problem = "stored " + to_string(c.phi) + " differs from spine " + to_string(instability(*c.ne));
    } else if (cx.entails(c.phi)) {
        problem = "cut survives under its own cofibration " + to_string(c.phi);
    }
    if (problem.empty()) return;
    if (a.violations++ == 0) a.first_violation = problem;
}
} // namespace

Value whnf(const Cx& cx, const Value& v) {
    Value cur = v;
    for (;;) {
        const Val& node = *cur;
        if (auto* l = std::get_if<Val::Loop>(&node.node)) {
            return cx.canon(l->r).is_const() ? val::base() : cur;
        }
        if (auto* h = std::get_if<Val::FHCom>(&node.node)) {
            if (!cx.entails_eq(h->r, h->s) && !cx.entails(h->phi)) return cur;
            cur = h->tube(cx, h->s);
            continue;
        }
        if (auto* e = std::get_if<Val::Englue>(&node.node)) {
            if (!cx.entails(e->phi)) return cur;
            cur = e->part(cx);
            continue;
        }
        if (auto* c = std::get_if<Val::Cut>(&node.node)) {
            if (cx.entails(c->phi)) {
                cur = c->partial(cx);
                continue;
            }
            if (auto* g = std::get_if<TyVal::Glue>(&c->type->node); g && cx.entails(g->phi)) {
                // The glue type has collapsed onto its partial type.
                cur = reflect(cx, g->part(cx), c->phi, c->ne, c->partial);
                continue;
            }
            audit_cut(cx, *c);
        }
        return cur;
    }
}

Value mk_loop(const Cx& cx, Dim r) {
    if (cx.canon(r).is_const()) return val::base();
    return mkval(Val::Loop{r});
}

Value mk_englue(const Cx& cx, const Cof& phi, Thunk part, Value total) {
    if (cx.entails(phi)) return part(cx);
    return mkval(Val::Englue{phi, std::move(part), std::move(total)});
}

Value mk_fhcom(const Cx& cx, Dim r, Dim s, const Cof& phi, DimClosure tube, std::string name) {
    if (cx.entails_eq(r, s) || cx.entails(phi)) return tube(cx, s);
    return mkval(Val::FHCom{r, s, phi, std::move(tube), std::move(name)});
}

Thunk absurd_thunk() {
    return [](const Cx&) -> Value { throw DomainError("forced a partial value under a false cofibration"); };
}

Value reflect(const Cx& cx, const TyValue& a, const Cof& phi, NeuPtr ne, Thunk partial) {
    if (cx.entails(phi)) return partial(cx);
    TyValue ty = whnf_ty(cx, a);
    return std::visit(
        [&](const auto& t) -> Value {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TyVal::S1> || std::is_same_v<T, TyVal::Glue>) {
                Value out = mkval(Val::Cut{ne, phi, partial, ty});
                audit_cut(cx, std::get<Val::Cut>(out->node));
                return out;
            } else if constexpr (std::is_same_v<T, TyVal::Pi>) {
                return val::lam(
                    [t, phi, ne, partial](const Cx& c, const Value& x) {
                        Thunk px = [partial, x](const Cx& c2) { return do_app(c2, partial(c2), x); };
                        return reflect(c, t.cod(c, x), phi, mkneu(Neu::App{ne, x, t.dom}), px);
                    },
                    t.name);
            } else if constexpr (std::is_same_v<T, TyVal::Sigma>) {
                Value a0 = reflect(cx, t.dom, phi, mkneu(Neu::Fst{ne}),
                                   [partial](const Cx& c) { return do_fst(c, partial(c)); });
                Value a1 = reflect(cx, t.cod(cx, a0), phi, mkneu(Neu::Snd{ne}),
                                   [partial](const Cx& c) { return do_snd(c, partial(c)); });
                return val::pair(a0, a1);
            } else {
                return val::plam(
                    [t, phi, ne, partial](const Cx& c, Dim i) {
                        Thunk pi = [t, phi, partial, i](const Cx& c2) -> Value {
                            if (c2.entails(phi)) return do_papp(c2, partial(c2), i);
                            if (c2.entails_eq(i, Dim::zero())) return t.a0;
                            if (c2.entails_eq(i, Dim::one())) return t.a1;
                            throw SystemCoverageError("path boundary forced off its cofibration");
                        };
                        return reflect(c, t.line(c, i), cof::join(phi, cof::boundary(i)),
                                       mkneu(Neu::PApp{ne, i}), pi);
                    },
                    t.name);
            }
        },
        ty->node);
}

Value reflect_var(const Cx& cx, const TyValue& a, int level) {
    return reflect(cx, a, cof::bot(), mkneu(Neu::Var{level}), absurd_thunk());
}

// ---------------------------------------------------------------------------
// Eliminators

Value do_app(const Cx& cx, const Value& f, const Value& a) {
    Value v = whnf(cx, f);
    if (auto* l = std::get_if<Val::Lam>(&v->node)) return l->body(cx, a);
    throw DomainError("application of a non-function");
}

Value do_fst(const Cx& cx, const Value& p) {
    Value v = whnf(cx, p);
    if (auto* q = std::get_if<Val::Pair>(&v->node)) return q->fst;
    throw DomainError("first projection of a non-pair");
}

Value do_snd(const Cx& cx, const Value& p) {
    Value v = whnf(cx, p);
    if (auto* q = std::get_if<Val::Pair>(&v->node)) return q->snd;
    throw DomainError("second projection of a non-pair");
}

Value do_papp(const Cx& cx, const Value& p, Dim r) {
    Value v = whnf(cx, p);
    if (auto* l = std::get_if<Val::PLam>(&v->node)) return l->body(cx, r);
    throw DomainError("path application of a non-path");
}

Value do_unglue(const Cx& cx, const Cof& phi, const Thunk& equiv, const Value& g) {
    if (cx.entails(phi)) return do_app(cx, do_fst(cx, equiv(cx)), g);
    Value v = whnf(cx, g);
    if (auto* e = std::get_if<Val::Englue>(&v->node)) return e->total;
    if (auto* c = std::get_if<Val::Cut>(&v->node)) {
        auto* gt = std::get_if<TyVal::Glue>(&c->type->node);
        if (!gt) throw DomainError("unglue of a neutral outside a glue type");
        Thunk partial = [phi, equiv, g](const Cx& c2) { return do_unglue(c2, phi, equiv, g); };
        return reflect(cx, gt->base, cof::join(c->phi, gt->phi), mkneu(Neu::Unglue{c->ne, c->type}), partial);
    }
    throw DomainError("unglue of a non-glue value");
}

Value do_ind(const Cx& cx, const TyValClosure& motive, const Value& b, const DimClosure& loop, const Value& scrut,
             const std::string& motive_name, const std::string& loop_name) {
    Value v = whnf(cx, scrut);
    return std::visit(
        [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Val::Base>) {
                return b;
            } else if constexpr (std::is_same_v<T, Val::Loop>) {
                return loop(cx, x.r);
            } else if constexpr (std::is_same_v<T, Val::FHCom>) {
                Val::FHCom h = x;
                TyDimClosure line = [h, motive](const Cx& c, Dim k) {
                    return motive(c, mk_fhcom(c, h.r, k, h.phi, h.tube, h.name));
                };
                DimClosure tube = [h, motive, b, loop, motive_name, loop_name](const Cx& c, Dim k) {
                    return do_ind(c, motive, b, loop, h.tube(c, k), motive_name, loop_name);
                };
                return do_com(cx, line, h.r, h.s, h.phi, tube);
            } else if constexpr (std::is_same_v<T, Val::Cut>) {
                Thunk partial = [motive, b, loop, v, motive_name, loop_name](const Cx& c) {
                    return do_ind(c, motive, b, loop, v, motive_name, loop_name);
                };
                return reflect(cx, motive(cx, v), x.phi,
                               mkneu(Neu::Ind{x.ne, motive, b, loop, motive_name, loop_name}), partial);
            } else {
                throw DomainError("circle induction on a non-circle value");
            }
        },
        v->node);
}

// ---------------------------------------------------------------------------
// Evaluation

Dim eval_dim(const Env& env, Dim d) {
    if (!d.is_var()) return d;
    const auto& e = env_lookup(env, d.var);
    if (auto* r = std::get_if<Dim>(&e)) return *r;
    throw DomainError("term variable used as a dimension");
}

Cof eval_cof(const Cx& cx, const Env& env, const CofibPtr& c) {
    return to_dnf(c, [&](int k) { return eval_dim(env, Dim::var_of(k)); }, cx.size());
}

namespace {

template <class B, class F>
auto eval_system(const Cx& cx, const Env& env, const std::vector<SysBranch<B>>& branches, F&& f) {
    for (const auto& b : branches)
        if (cx.entails(eval_cof(cx, env, b.cond))) return f(b.body);
    throw SystemCoverageError("no branch of the system applies");
}

} // namespace

TyValue eval_ty(const Cx& cx, const Env& env, const TypePtr& t) {
    return std::visit(
        [&](const auto& n) -> TyValue {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, TypeExpr::Path>) {
                TypePtr line = n.line;
                TyDimClosure l = [env, line](const Cx& c, Dim i) { return eval_ty(c, env_push(env, i), line); };
                return tyval::path(l, eval(cx, env, n.a0), eval(cx, env, n.a1), n.name);
            } else if constexpr (std::is_same_v<N, TypeExpr::Pi> || std::is_same_v<N, TypeExpr::Sigma>) {
                TypePtr cod = n.cod;
                TyValClosure k = [env, cod](const Cx& c, const Value& x) { return eval_ty(c, env_push(env, x), cod); };
                if constexpr (std::is_same_v<N, TypeExpr::Pi>) {
                    return tyval::pi(eval_ty(cx, env, n.dom), k, n.name);
                } else {
                    return tyval::sigma(eval_ty(cx, env, n.dom), k, n.name);
                }
            } else if constexpr (std::is_same_v<N, TypeExpr::Glue>) {
                TypePtr part = n.part;
                TermPtr equiv = n.equiv;
                return mkty(TyVal::Glue{eval_cof(cx, env, n.phi), eval_ty(cx, env, n.base),
                                        [env, part](const Cx& c) { return eval_ty(c, env, part); },
                                        [env, equiv](const Cx& c) { return eval(c, env, equiv); }});
            } else if constexpr (std::is_same_v<N, TypeExpr::S1>) {
                return tyval::s1();
            } else {
                return eval_system(cx, env, n.branches, [&](const TypePtr& b) { return eval_ty(cx, env, b); });
            }
        },
        t->node);
}

Value eval(const Cx& cx, const Env& env, const TermPtr& t) {
    return std::visit(
        [&](const auto& n) -> Value {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Term::Var>) {
                const auto& e = env_lookup(env, n.index);
                if (auto* v = std::get_if<Value>(&e)) return *v;
                throw DomainError("dimension variable used as a term");
            } else if constexpr (std::is_same_v<N, Term::Lam>) {
                TermPtr body = n.body;
                return val::lam([env, body](const Cx& c, const Value& x) { return eval(c, env_push(env, x), body); },
                                n.name);
            } else if constexpr (std::is_same_v<N, Term::App>) {
                return do_app(cx, eval(cx, env, n.fn), eval(cx, env, n.arg));
            } else if constexpr (std::is_same_v<N, Term::Pair>) {
                return val::pair(eval(cx, env, n.fst), eval(cx, env, n.snd));
            } else if constexpr (std::is_same_v<N, Term::Fst>) {
                return do_fst(cx, eval(cx, env, n.pair));
            } else if constexpr (std::is_same_v<N, Term::Snd>) {
                return do_snd(cx, eval(cx, env, n.pair));
            } else if constexpr (std::is_same_v<N, Term::PLam>) {
                TermPtr body = n.body;
                return val::plam([env, body](const Cx& c, Dim i) { return eval(c, env_push(env, i), body); }, n.name);
            } else if constexpr (std::is_same_v<N, Term::PApp>) {
                return do_papp(cx, eval(cx, env, n.path), eval_dim(env, n.r));
            } else if constexpr (std::is_same_v<N, Term::Englue>) {
                TermPtr part = n.part;
                return mk_englue(cx, eval_cof(cx, env, n.phi), [env, part](const Cx& c) { return eval(c, env, part); },
                                 eval(cx, env, n.total));
            } else if constexpr (std::is_same_v<N, Term::Unglue>) {
                TermPtr equiv = n.equiv;
                return do_unglue(cx, eval_cof(cx, env, n.phi), [env, equiv](const Cx& c) { return eval(c, env, equiv); },
                                 eval(cx, env, n.glue));
            } else if constexpr (std::is_same_v<N, Term::Base>) {
                return val::base();
            } else if constexpr (std::is_same_v<N, Term::Loop>) {
                return mk_loop(cx, eval_dim(env, n.r));
            } else if constexpr (std::is_same_v<N, Term::IndS1>) {
                TypePtr motive = n.motive;
                TermPtr loop = n.loop_case;
                TyValClosure m = [env, motive](const Cx& c, const Value& x) {
                    return eval_ty(c, env_push(env, x), motive);
                };
                DimClosure l = [env, loop](const Cx& c, Dim i) { return eval(c, env_push(env, i), loop); };
                return do_ind(cx, m, eval(cx, env, n.base_case), l, eval(cx, env, n.scrut), n.motive_name,
                              n.loop_name);
            } else if constexpr (std::is_same_v<N, Term::HCom>) {
                TermPtr tube = n.tube;
                DimClosure tb = [env, tube](const Cx& c, Dim i) { return eval(c, env_push(env, i), tube); };
                return do_hcom(cx, eval_ty(cx, env, n.type), eval_dim(env, n.r), eval_dim(env, n.s),
                               eval_cof(cx, env, n.phi), tb);
            } else if constexpr (std::is_same_v<N, Term::Coe>) {
                TypePtr line = n.line;
                TyDimClosure l = [env, line](const Cx& c, Dim i) { return eval_ty(c, env_push(env, i), line); };
                return do_coe(cx, l, eval_dim(env, n.r), eval_dim(env, n.s), eval(cx, env, n.arg));
            } else {
                return eval_system(cx, env, n.branches, [&](const TermPtr& b) { return eval(cx, env, b); });
            }
        },
        t->node);
}

Env init_env(const Cx& cx) {
    Env env;
    for (int l = 0; l < cx.size(); ++l) {
        const auto& e = cx.at_level(l);
        if (e.is_dim) {
            env = env_push(env, Dim::var_of(l));
        } else {
            env = env_push(env, reflect_var(cx, e.type, l));
        }
    }
    return env;
}

// ---------------------------------------------------------------------------
// Equivalences

TyValue is_contr_type(const TyValue& a) {
    return tyval::sigma(
        a,
        [a](const Cx&, const Value& center) {
            return tyval::pi(a, [a, center](const Cx&, const Value& y) { return tyval::const_path(a, center, y); },
                             "y");
        },
        "c");
}

TyValue fiber_type(const TyValue& a, const TyValue& b, const Value& f, const Value& y) {
    return tyval::sigma(
        a, [b, f, y](const Cx& c, const Value& x) { return tyval::const_path(b, do_app(c, f, x), y); }, "a");
}

TyValue equiv_type(const TyValue& a, const TyValue& b) {
    return tyval::sigma(
        tyval::arrow(a, b),
        [a, b](const Cx&, const Value& f) {
            return tyval::pi(b, [a, b, f](const Cx&, const Value& y) { return is_contr_type(fiber_type(a, b, f, y)); },
                             "b");
        },
        "f");
}

} // namespace cubical
