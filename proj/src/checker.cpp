#include "cubical/checker.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "cubical/errors.hpp"
#include "cubical/nbe.hpp"

namespace cubical {

using namespace surface;

namespace {

using TypeAt = std::function<TyValue(const Ctx&)>;

TypeAt constant(const TyValue& a) {
    return [a](const Ctx&) { return a; };
}

// Re-throws an elaboration error with the branch it arose in.
template <class F>
auto in_branch(const std::string& label, F&& f) -> decltype(f()) {
    if (label.empty()) return f();
    auto suffix = [&](const Error& e) { return std::string(e.what()) + " (in branch " + label + ")"; };
    try {
        return f();
    } catch (const BoundaryError& e) {
        throw BoundaryError(suffix(e), e.span());
    } catch (const CoverageError& e) {
        throw CoverageError(suffix(e), e.span());
    } catch (const NotAPi& e) {
        throw NotAPi(suffix(e), e.span());
    } catch (const TypeError& e) {
        throw TypeError(suffix(e), e.span());
    } catch (const ScopeError& e) {
        throw ScopeError(suffix(e), e.span());
    }
}

template <class F>
auto under(const Ctx& ctx, const Cof& hyp, F&& f) {
    using R = decltype(f(ctx));
    std::vector<std::pair<Conj, R>> out;
    if (ctx.cx.entails(hyp)) {
        out.push_back({Conj{}, f(ctx)});
        return out;
    }
    for (const auto& [conj, sub] : ctx.split(hyp)) {
        std::string label = ctx.show(cof::of_conj(conj));
        out.push_back({conj, in_branch(label, [&] { return f(sub); })});
    }
    return out;
}

template <class T, class Mk>
T combine(const Ctx& ctx, const std::vector<std::pair<Conj, T>>& bs, Mk&& mk_system) {
    if (bs.size() == 1) return bs[0].second;
    bool same = !bs.empty();
    for (const auto& b : bs) same = same && to_sexpr(b.second) == to_sexpr(bs[0].second);
    if (same) return bs[0].second;
    std::vector<SysBranch<T>> out;
    for (const auto& [conj, t] : bs) out.push_back({ctx.quote_cof(cof::of_conj(conj)), t});
    return mk_system(std::move(out));
}

TermPtr combine_tm(const Ctx& ctx, const std::vector<std::pair<Conj, TermPtr>>& bs) {
    return combine(ctx, bs, [](std::vector<SysBranch<TermPtr>> v) { return tm::system(std::move(v)); });
}

TypePtr combine_ty(const Ctx& ctx, const std::vector<std::pair<Conj, TypePtr>>& bs) {
    return combine(ctx, bs, [](std::vector<SysBranch<TypePtr>> v) { return ty::system(std::move(v)); });
}

template <class T, class Same>
void check_agreement(const Ctx& ctx, const std::vector<SysBranch<T>>& bs, const std::vector<Cof>& conds, Span span,
                     Same&& same) {
    for (size_t k = 0; k < bs.size(); ++k) {
        for (size_t l = k + 1; l < bs.size(); ++l) {
            for (const auto& [conj, sub] : ctx.split(cof::meet(conds[k], conds[l]))) {
                if (!same(sub, bs[k].body, bs[l].body)) {
                    throw BoundaryError("system branches " + std::to_string(k + 1) + " and " + std::to_string(l + 1) +
                                            " disagree under " + ctx.show(cof::of_conj(conj)),
                                        span);
                }
            }
        }
    }
}

// Agreement of the systems introduced by left inversion.
void debug_agree(const Ctx& ctx, const TermPtr& t, const TypeAt& type_at, Span span) {
    if (!debug_systems()) return;
    auto* s = std::get_if<Term::System>(&t->node);
    if (!s) return;
    std::vector<Cof> conds;
    for (const auto& b : s->branches) conds.push_back(ctx.eval_cof(b.cond));
    check_agreement(ctx, s->branches, conds, span, [&](const Ctx& sub, const TermPtr& a, const TermPtr& b) {
        return conv(sub.cx, type_at(sub), sub.eval(a), sub.eval(b));
    });
}

TermPtr check_under(const Ctx& ctx, const Cof& hyp, const SPtr& s, const TypeAt& type_at);
TypePtr check_ty_under(const Ctx& ctx, const Cof& hyp, const SPtr& s);

TermPtr check_system(const Ctx& ctx, const Cof& hyp, const std::vector<SBranch>& branches, Span span,
                     const TypeAt& type_at) {
    std::vector<SysBranch<TermPtr>> out;
    std::vector<Cof> scopes;
    Cof covered = cof::bot();
    for (const auto& b : branches) {
        CofibPtr c = check_cof(ctx, b.cond);
        Cof cv = ctx.eval_cof(c);
        Cof scope = cof::meet(cv, hyp);
        out.push_back({c, check_under(ctx, scope, b.body, type_at)});
        scopes.push_back(scope);
        covered = cof::join(covered, cv);
    }
    if (!entails(ctx.cx.cong(), hyp, covered)) {
        throw CoverageError("system does not cover " + ctx.show(hyp) + ": its branches cover only " + ctx.show(covered),
                            span);
    }
    check_agreement(ctx, out, scopes, span, [&](const Ctx& sub, const TermPtr& a, const TermPtr& b) {
        return conv(sub.cx, type_at(sub), sub.eval(a), sub.eval(b));
    });
    return tm::system(std::move(out));
}

TypePtr check_ty_system(const Ctx& ctx, const Cof& hyp, const std::vector<SBranch>& branches, Span span) {
    std::vector<SysBranch<TypePtr>> out;
    std::vector<Cof> scopes;
    Cof covered = cof::bot();
    for (const auto& b : branches) {
        CofibPtr c = check_cof(ctx, b.cond);
        Cof cv = ctx.eval_cof(c);
        Cof scope = cof::meet(cv, hyp);
        out.push_back({c, check_ty_under(ctx, scope, b.body)});
        scopes.push_back(scope);
        covered = cof::join(covered, cv);
    }
    if (!entails(ctx.cx.cong(), hyp, covered)) {
        throw CoverageError("system does not cover " + ctx.show(hyp) + ": its branches cover only " + ctx.show(covered),
                            span);
    }
    check_agreement(ctx, out, scopes, span, [&](const Ctx& sub, const TypePtr& a, const TypePtr& b) {
        return conv_ty(sub.cx, sub.eval_ty(a), sub.eval_ty(b));
    });
    return ty::system(std::move(out));
}

TermPtr check_under(const Ctx& ctx, const Cof& hyp, const SPtr& s, const TypeAt& type_at) {
    if (auto* sys = std::get_if<SExpr::System>(&s->node)) return check_system(ctx, hyp, sys->branches, s->span, type_at);
    TermPtr t = combine_tm(ctx, under(ctx, hyp, [&](const Ctx& sub) { return check(sub, s, type_at(sub)); }));
    debug_agree(ctx, t, type_at, s->span);
    return t;
}

TypePtr check_ty_under(const Ctx& ctx, const Cof& hyp, const SPtr& s) {
    if (auto* sys = std::get_if<SExpr::System>(&s->node)) return check_ty_system(ctx, hyp, sys->branches, s->span);
    return combine_ty(ctx, under(ctx, hyp, [&](const Ctx& sub) { return check_ty(sub, s); }));
}

CofibPtr check_cof_in(const Ctx& ctx, const SCofPtr& c, std::vector<std::string>& bound);

Dim resolve_dim(const Ctx& ctx, const SDim& d, const std::vector<std::string>& bound) {
    if (d.kind == SDim::Kind::Zero) return Dim::zero();
    if (d.kind == SDim::Kind::One) return Dim::one();
    for (int k = static_cast<int>(bound.size()) - 1; k >= 0; --k)
        if (bound[k] == d.name) return Dim::var_of(static_cast<int>(bound.size()) - 1 - k);
    int offset = static_cast<int>(bound.size());
    for (int level = ctx.cx.size() - 1; level >= 0; --level) {
        if (ctx.names[level] != d.name) continue;
        if (!ctx.cx.at_level(level).is_dim) throw ScopeError("'" + d.name + "' is a term, not a dimension", d.span);
        return Dim::var_of(ctx.cx.index_of(level) + offset);
    }
    throw ScopeError("unbound dimension '" + d.name + "'", d.span);
}

CofibPtr check_cof_in(const Ctx& ctx, const SCofPtr& c, std::vector<std::string>& bound) {
    return std::visit(
        [&](const auto& n) -> CofibPtr {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, SCof::Eq>) {
                return cof_eq(resolve_dim(ctx, n.lhs, bound), resolve_dim(ctx, n.rhs, bound));
            } else if constexpr (std::is_same_v<N, SCof::And>) {
                CofibPtr a = check_cof_in(ctx, n.lhs, bound);
                return cof_and(a, check_cof_in(ctx, n.rhs, bound));
            } else if constexpr (std::is_same_v<N, SCof::Or>) {
                CofibPtr a = check_cof_in(ctx, n.lhs, bound);
                return cof_or(a, check_cof_in(ctx, n.rhs, bound));
            } else {
                bound.push_back(n.name);
                CofibPtr body = check_cof_in(ctx, n.body, bound);
                bound.pop_back();
                return cof_forall(body, n.name);
            }
        },
        c->node);
}

const TyVal::Glue* as_glue(const Ctx& ctx, const TyValue& a, TyValue& keep) {
    if (auto* g = std::get_if<TyVal::Glue>(&a->node)) return g;
    keep = whnf_ty(ctx.cx, a);
    return std::get_if<TyVal::Glue>(&keep->node);
}

[[noreturn]] void cannot_infer(Span span) {
    throw TypeError("cannot infer the type of this term; add an annotation (e : A)", span);
}

[[noreturn]] void not_a_term(Span span) { throw TypeError("expected a term, found a type", span); }

void check_endpoints(const Ctx& ctx, const TermPtr& body, const std::function<TyValue(Dim)>& type_at,
                     const std::function<Value(Dim)>& expected, const std::string& what, Span span) {
    for (Dim e : {Dim::zero(), Dim::one()}) {
        Value v = eval(ctx.cx, env_push(ctx.env, e), body);
        TyValue a = type_at(e);
        Value want = expected(e);
        if (!conv(ctx.cx, a, v, want)) {
            throw BoundaryError(what + " at " + to_string(e) + " is " + ctx.show(a, v) + " but must be " +
                                    ctx.show(a, want),
                                span);
        }
    }
}

} // namespace

bool debug_systems() {
    const char* v = std::getenv("CUBICAL_DEBUG_SYSTEMS");
    return v && std::string(v) != "0" && std::string(v) != "";
}

// ---------------------------------------------------------------------------
// Ctx

Ctx empty_ctx(const Globals& globals) {
    Ctx c;
    c.globals = &globals;
    return c;
}

Ctx Ctx::extend_dim(const std::string& name) const {
    Ctx c = *this;
    c.cx = cx.extend_dim(name);
    c.env = env_push(env, Dim::var_of(cx.size()));
    c.names.push_back(name);
    return c;
}

Ctx Ctx::extend_term(const std::string& name, const TyValue& type) const {
    Ctx c = *this;
    c.cx = cx.extend_term(type, name);
    c.env = env_push(env, reflect_var(c.cx, type, cx.size()));
    c.names.push_back(name);
    return c;
}

std::vector<std::pair<Conj, Ctx>> Ctx::split(const Cof& c) const {
    std::vector<std::pair<Conj, Ctx>> out;
    for (auto& [conj, sub] : cx.split(c)) {
        Ctx s = *this;
        s.cx = std::move(sub);
        out.emplace_back(conj, std::move(s));
    }
    return out;
}

Value Ctx::eval(const TermPtr& t) const { return cubical::eval(cx, env, t); }
TyValue Ctx::eval_ty(const TypePtr& t) const { return cubical::eval_ty(cx, env, t); }
Cof Ctx::eval_cof(const CofibPtr& c) const { return cubical::eval_cof(cx, env, c); }
Dim Ctx::eval_dim(Dim index) const { return cubical::eval_dim(env, index); }

CofibPtr Ctx::quote_cof(const Cof& c) const {
    return to_cofib(c, [this](Dim d) { return cx.dim_to_index(d); });
}

std::string Ctx::show(const TyValue& a) const { return surface::print(embed(reify_ty(cx, a)), names); }

std::string Ctx::show(const TyValue& a, const Value& v) const { return surface::print(embed(reify(cx, a, v)), names); }

std::string Ctx::show(const Cof& c) const { return surface::print(quote_cof(c), names); }

// ---------------------------------------------------------------------------
// Elaboration

Dim check_dim(const Ctx& ctx, const SDim& d) { return resolve_dim(ctx, d, {}); }

CofibPtr check_cof(const Ctx& ctx, const SCofPtr& c) {
    std::vector<std::string> bound;
    return check_cof_in(ctx, c, bound);
}

TypePtr check_ty(const Ctx& ctx, const SPtr& s) {
    return std::visit(
        [&](const auto& n) -> TypePtr {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, SExpr::S1>) {
                return ty::s1();
            } else if constexpr (std::is_same_v<N, SExpr::Path>) {
                Ctx inner = ctx.extend_dim(n.name);
                TypePtr line = check_ty(inner, n.line);
                auto at = [&](Dim e) { return eval_ty(ctx.cx, env_push(ctx.env, e), line); };
                TermPtr a0 = check(ctx, n.a0, at(Dim::zero()));
                TermPtr a1 = check(ctx, n.a1, at(Dim::one()));
                return ty::path(line, a0, a1, n.name);
            } else if constexpr (std::is_same_v<N, SExpr::Pi> || std::is_same_v<N, SExpr::Sigma>) {
                TypePtr dom = check_ty(ctx, n.dom);
                TypePtr cod = check_ty(ctx.extend_term(n.name, ctx.eval_ty(dom)), n.cod);
                if constexpr (std::is_same_v<N, SExpr::Pi>) {
                    return ty::pi(dom, cod, n.name);
                } else {
                    return ty::sigma(dom, cod, n.name);
                }
            } else if constexpr (std::is_same_v<N, SExpr::GlueTy>) {
                TypePtr base = check_ty(ctx, n.base);
                TyValue base_v = ctx.eval_ty(base);
                std::vector<SysBranch<TypePtr>> parts;
                std::vector<SysBranch<TermPtr>> equivs;
                std::vector<Cof> conds;
                CofibPtr phi;
                for (const auto& b : n.branches) {
                    auto* pair = std::get_if<SExpr::Pair>(&b.body->node);
                    if (!pair) throw TypeError("a glue branch must be a pair (A, f)", b.body->span);
                    CofibPtr c = check_cof(ctx, b.cond);
                    Cof cv = ctx.eval_cof(c);
                    auto elaborated = under(ctx, cv, [&](const Ctx& sub) {
                        TypePtr a = check_ty(sub, pair->fst);
                        TermPtr f = check(sub, pair->snd, equiv_type(sub.eval_ty(a), base_v));
                        return std::make_pair(a, f);
                    });
                    std::vector<std::pair<Conj, TypePtr>> as;
                    std::vector<std::pair<Conj, TermPtr>> fs;
                    for (const auto& [conj, af] : elaborated) {
                        as.push_back({conj, af.first});
                        fs.push_back({conj, af.second});
                    }
                    parts.push_back({c, combine_ty(ctx, as)});
                    equivs.push_back({c, combine_tm(ctx, fs)});
                    conds.push_back(cv);
                    phi = phi ? cof_or(phi, c) : c;
                }
                if (!phi) return base;
                check_agreement(ctx, parts, conds, s->span, [&](const Ctx& sub, const TypePtr& a, const TypePtr& b) {
                    return conv_ty(sub.cx, sub.eval_ty(a), sub.eval_ty(b));
                });
                check_agreement(ctx, equivs, conds, s->span, [&](const Ctx& sub, const TermPtr& f, const TermPtr& g) {
                    TyValue e = equiv_type(sub.eval_ty(parts[0].body), base_v);
                    for (size_t k = 0; k < parts.size(); ++k) {
                        if (sub.cx.entails(conds[k])) {
                            e = equiv_type(sub.eval_ty(parts[k].body), base_v);
                            break;
                        }
                    }
                    return conv(sub.cx, e, sub.eval(f), sub.eval(g));
                });
                if (parts.size() == 1) return ty::glue(phi, base, parts[0].body, equivs[0].body);
                return ty::glue(phi, base, ty::system(std::move(parts)), tm::system(std::move(equivs)));
            } else if constexpr (std::is_same_v<N, SExpr::System>) {
                return check_ty_system(ctx, cof::top(), n.branches, s->span);
            } else if constexpr (std::is_same_v<N, SExpr::Var>) {
                for (const auto& nm : ctx.names)
                    if (nm == n.name) throw TypeError("'" + n.name + "' is a term, not a type", s->span);
                if (ctx.globals) {
                    if (auto it = ctx.globals->types.find(n.name); it != ctx.globals->types.end()) return it->second;
                    if (ctx.globals->defs.count(n.name))
                        throw TypeError("'" + n.name + "' is a term, not a type", s->span);
                }
                throw ScopeError("unbound type '" + n.name + "'", s->span);
            } else {
                throw TypeError("expected a type", s->span);
            }
        },
        s->node);
}

TermPtr check(const Ctx& ctx, const SPtr& s, const TyValue& type) {
    return std::visit(
        [&](const auto& n) -> TermPtr {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, SExpr::Lam>) {
                TyValue w = whnf_ty(ctx.cx, type);
                auto* pi = std::get_if<TyVal::Pi>(&w->node);
                if (!pi) throw TypeError("a lambda needs a function type, but the expected type is " + ctx.show(type), s->span);
                Ctx inner = ctx.extend_term(n.name, pi->dom);
                Value x = reflect_var(inner.cx, pi->dom, ctx.cx.size());
                return tm::lam(check(inner, n.body, pi->cod(inner.cx, x)), n.name);
            } else if constexpr (std::is_same_v<N, SExpr::Pair>) {
                TyValue w = whnf_ty(ctx.cx, type);
                auto* sg = std::get_if<TyVal::Sigma>(&w->node);
                if (!sg) throw TypeError("a pair needs a pair type, but the expected type is " + ctx.show(type), s->span);
                TermPtr a = check(ctx, n.fst, sg->dom);
                TermPtr b = check(ctx, n.snd, sg->cod(ctx.cx, ctx.eval(a)));
                return tm::pair(a, b);
            } else if constexpr (std::is_same_v<N, SExpr::PLam>) {
                TyValue w = whnf_ty(ctx.cx, type);
                auto* p = std::get_if<TyVal::Path>(&w->node);
                if (!p) throw TypeError("a path abstraction needs a path type, but the expected type is " + ctx.show(type), s->span);
                Ctx inner = ctx.extend_dim(n.name);
                TermPtr body = check(inner, n.body, p->line(inner.cx, Dim::var_of(ctx.cx.size())));
                check_endpoints(
                    ctx, body, [&](Dim e) { return p->line(ctx.cx, e); },
                    [&](Dim e) { return e == Dim::zero() ? p->a0 : p->a1; }, "path endpoint", s->span);
                return tm::plam(body, n.name);
            } else if constexpr (std::is_same_v<N, SExpr::Glue>) {
                TyValue keep;
                const TyVal::Glue* g = as_glue(ctx, type, keep);
                if (!g) throw TypeError("glue needs a glue type, but the expected type is " + ctx.show(type), s->span);
                TyVal::Glue gt = *g;
                CofibPtr phi;
                Cof phi_v = cof::bot();
                for (const auto& b : n.branches) {
                    CofibPtr c = check_cof(ctx, b.cond);
                    phi = phi ? cof_or(phi, c) : c;
                    phi_v = cof::join(phi_v, ctx.eval_cof(c));
                }
                if (!phi) phi = cof_bot();
                if (!equivalent(ctx.cx.cong(), phi_v, gt.phi)) {
                    throw TypeError("glue cofibration " + ctx.show(phi_v) + " does not match the type's " +
                                        ctx.show(gt.phi),
                                    s->span);
                }
                TermPtr part = check_system(ctx, gt.phi, n.branches, s->span,
                                            [gt](const Ctx& c) { return gt.part(c.cx); });
                if (n.branches.size() == 1) part = std::get<Term::System>(part->node).branches[0].body;
                TermPtr total = check(ctx, n.total, gt.base);
                for (const auto& [conj, sub] : ctx.split(gt.phi)) {
                    Value f = do_fst(sub.cx, gt.equiv(sub.cx));
                    Value fa = do_app(sub.cx, f, sub.eval(part));
                    if (!conv(sub.cx, gt.base, fa, sub.eval(total))) {
                        throw BoundaryError("glue: the base component is " + sub.show(gt.base, sub.eval(total)) +
                                                " but must restrict to f(a) = " + sub.show(gt.base, fa) + " under " +
                                                ctx.show(cof::of_conj(conj)),
                                            s->span);
                    }
                }
                return tm::englue(phi, part, total);
            } else if constexpr (std::is_same_v<N, SExpr::System>) {
                return check_system(ctx, cof::top(), n.branches, s->span, constant(type));
            } else {
                auto [t, actual] = infer(ctx, s);
                if (!conv_ty(ctx.cx, type, actual)) {
                    throw TypeError("type mismatch: expected " + ctx.show(type) + " but found " + ctx.show(actual),
                                    s->span);
                }
                return t;
            }
        },
        s->node);
}

std::pair<TermPtr, TyValue> infer(const Ctx& ctx, const SPtr& s) {
    return std::visit(
        [&](const auto& n) -> std::pair<TermPtr, TyValue> {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, SExpr::Var>) {
                for (int level = ctx.cx.size() - 1; level >= 0; --level) {
                    if (ctx.names[level] != n.name) continue;
                    const CxEntry& e = ctx.cx.at_level(level);
                    if (e.is_dim) throw ScopeError("'" + n.name + "' is a dimension, not a term", s->span);
                    return {tm::var(ctx.cx.index_of(level)), e.type};
                }
                if (ctx.globals) {
                    if (auto it = ctx.globals->defs.find(n.name); it != ctx.globals->defs.end())
                        return {it->second.term, it->second.type_value};
                    if (auto it = ctx.globals->unreferenceable.find(n.name); it != ctx.globals->unreferenceable.end())
                        throw ScopeError("'" + n.name + "' " + it->second + " and cannot be referenced", s->span);
                    if (ctx.globals->types.count(n.name)) not_a_term(s->span);
                }
                throw ScopeError("unbound variable '" + n.name + "'", s->span);
            } else if constexpr (std::is_same_v<N, SExpr::App>) {
                auto [f, ft] = infer(ctx, n.fn);
                TyValue w = whnf_ty(ctx.cx, ft);
                auto* pi = std::get_if<TyVal::Pi>(&w->node);
                if (!pi) throw TypeError("cannot apply a term of type " + ctx.show(ft), n.fn->span);
                TermPtr a = check(ctx, n.arg, pi->dom);
                return {tm::app(f, a), pi->cod(ctx.cx, ctx.eval(a))};
            } else if constexpr (std::is_same_v<N, SExpr::Fst> || std::is_same_v<N, SExpr::Snd>) {
                auto [p, pt] = infer(ctx, n.pair);
                TyValue w = whnf_ty(ctx.cx, pt);
                auto* sg = std::get_if<TyVal::Sigma>(&w->node);
                if (!sg) throw TypeError("cannot project from a term of type " + ctx.show(pt), n.pair->span);
                if constexpr (std::is_same_v<N, SExpr::Fst>) {
                    return {tm::fst(p), sg->dom};
                } else {
                    return {tm::snd(p), sg->cod(ctx.cx, do_fst(ctx.cx, ctx.eval(p)))};
                }
            } else if constexpr (std::is_same_v<N, SExpr::PApp>) {
                auto [p, pt] = infer(ctx, n.path);
                TyValue w = whnf_ty(ctx.cx, pt);
                auto* path = std::get_if<TyVal::Path>(&w->node);
                if (!path) throw TypeError("cannot apply a term of type " + ctx.show(pt) + " to a dimension", n.path->span);
                Dim r = check_dim(ctx, n.r);
                return {tm::papp(p, r), path->line(ctx.cx, ctx.eval_dim(r))};
            } else if constexpr (std::is_same_v<N, SExpr::Ann>) {
                TyValue a = ctx.eval_ty(check_ty(ctx, n.type));
                return {check(ctx, n.term, a), a};
            } else if constexpr (std::is_same_v<N, SExpr::Base>) {
                return {tm::base(), tyval::s1()};
            } else if constexpr (std::is_same_v<N, SExpr::Loop>) {
                return {tm::loop(check_dim(ctx, n.r)), tyval::s1()};
            } else if constexpr (std::is_same_v<N, SExpr::Unglue>) {
                auto [g, gt] = infer(ctx, n.glue);
                TyValue keep;
                const TyVal::Glue* glue = as_glue(ctx, gt, keep);
                if (!glue) throw TypeError("unglue needs an element of a glue type, found " + ctx.show(gt), n.glue->span);
                TyVal::Glue gv = *glue;
                TermPtr equiv = combine_tm(ctx, under(ctx, gv.phi, [&](const Ctx& sub) {
                    return embed(reify(sub.cx, equiv_type(gv.part(sub.cx), gv.base), gv.equiv(sub.cx)));
                }));
                return {tm::unglue(ctx.quote_cof(gv.phi), equiv, g), gv.base};
            } else if constexpr (std::is_same_v<N, SExpr::HCom>) {
                TypePtr a = check_ty(ctx, n.type);
                TyValue av = ctx.eval_ty(a);
                Dim r = check_dim(ctx, n.r);
                Dim sd = check_dim(ctx, n.s);
                CofibPtr phi = check_cof(ctx, n.phi);
                Ctx inner = ctx.extend_dim(n.name);
                Dim i = Dim::var_of(ctx.cx.size());
                Cof hyp = cof::join(cof::eq(i, ctx.eval_dim(r)), ctx.eval_cof(phi));
                TermPtr tube = check_under(inner, hyp, n.tube, constant(av));
                return {tm::hcom(a, r, sd, phi, tube, n.name), av};
            } else if constexpr (std::is_same_v<N, SExpr::Coe>) {
                TypePtr line = check_ty(ctx.extend_dim(n.name), n.line);
                Dim r = check_dim(ctx, n.r);
                Dim sd = check_dim(ctx, n.s);
                auto at = [&](Dim d) { return eval_ty(ctx.cx, env_push(ctx.env, ctx.eval_dim(d)), line); };
                TermPtr arg = check(ctx, n.arg, at(r));
                return {tm::coe(line, r, sd, arg, n.name), at(sd)};
            } else if constexpr (std::is_same_v<N, SExpr::Ind>) {
                TypePtr motive = check_ty(ctx.extend_term(n.motive_name, tyval::s1()), n.motive);
                Env env = ctx.env;
                auto c_at = [&](const Cx& cx, const Value& v) { return eval_ty(cx, env_push(env, v), motive); };
                TermPtr b = check(ctx, n.base_case, c_at(ctx.cx, val::base()));
                Ctx inner = ctx.extend_dim(n.loop_name);
                Dim i = Dim::var_of(ctx.cx.size());
                TermPtr l = check(inner, n.loop_case, c_at(inner.cx, mk_loop(inner.cx, i)));
                Value bv = ctx.eval(b);
                check_endpoints(
                    ctx, l, [&](Dim) { return c_at(ctx.cx, val::base()); }, [&](Dim) { return bv; },
                    "ind-S1 loop case", n.loop_case->span);
                TermPtr scrut = check(ctx, n.scrut, tyval::s1());
                return {tm::ind_s1(motive, b, l, scrut, n.motive_name, n.loop_name), c_at(ctx.cx, ctx.eval(scrut))};
            } else if constexpr (std::is_same_v<N, SExpr::S1> || std::is_same_v<N, SExpr::Path> ||
                                 std::is_same_v<N, SExpr::Pi> || std::is_same_v<N, SExpr::Sigma> ||
                                 std::is_same_v<N, SExpr::GlueTy>) {
                not_a_term(s->span);
            } else {
                cannot_infer(s->span);
            }
        },
        s->node);
}

// ---------------------------------------------------------------------------
// Declarations

CheckedDecl check_decl(Globals& globals, const Decl& d) {
    if (globals.defs.count(d.name) || globals.types.count(d.name) || globals.unreferenceable.count(d.name))
        throw ScopeError("duplicate declaration '" + d.name + "'", d.span);
    CheckedDecl out;
    out.name = d.name;
    if (d.kind == Decl::Kind::Type) {
        Ctx ctx = empty_ctx(globals);
        TypePtr t = check_ty(ctx, d.body);
        globals.types[d.name] = t;
        out.is_type = true;
        out.branches.push_back({ctx, "", t, nullptr});
        return out;
    }

    struct World {
        Ctx ctx;
        std::string label;
        std::vector<TypePtr> param_types;
    };
    std::vector<World> worlds{{empty_ctx(globals), "", {}}};
    bool referenceable = true;
    for (const auto& p : d.params) {
        std::vector<World> next;
        for (auto& w : worlds) {
            in_branch(w.label, [&] {
                switch (p.kind) {
                case Param::Kind::Term: {
                    TypePtr t = check_ty(w.ctx, p.type);
                    w.ctx = w.ctx.extend_term(p.name, w.ctx.eval_ty(t));
                    w.param_types.push_back(t);
                    next.push_back(w);
                    break;
                }
                case Param::Kind::Dim:
                    next.push_back({w.ctx.extend_dim(p.name), w.label, w.param_types});
                    break;
                case Param::Kind::Hyp:
                    for (auto& [conj, sub] : w.ctx.split(w.ctx.eval_cof(check_cof(w.ctx, p.cof)))) {
                        std::string label = w.ctx.show(cof::of_conj(conj));
                        if (!w.label.empty()) label = w.label + " /\\ " + label;
                        next.push_back({sub, label, w.param_types});
                    }
                    break;
                }
                return 0;
            });
        }
        if (p.kind != Param::Kind::Term) referenceable = false;
        worlds = std::move(next);
    }

    for (const auto& w : worlds) {
        in_branch(w.label, [&] {
            TypePtr t;
            TermPtr body;
            if (d.type) {
                t = check_ty(w.ctx, d.type);
                body = check(w.ctx, d.body, w.ctx.eval_ty(t));
            } else {
                auto [b, a] = infer(w.ctx, d.body);
                body = b;
                t = embed(reify_ty(w.ctx.cx, a));
            }
            out.branches.push_back({w.ctx, w.label, t, body});
            return 0;
        });
    }

    if (referenceable) {
        const CheckedBranch& b = out.branches.at(0);
        TermPtr term = b.term;
        TypePtr type = b.type;
        const auto& types = worlds[0].param_types;
        for (int k = static_cast<int>(types.size()) - 1; k >= 0; --k) {
            term = tm::lam(term, d.params[k].name);
            type = ty::pi(types[k], type, d.params[k].name);
        }
        globals.defs[d.name] = GlobalDef{term, type, eval_ty(Cx{}, nullptr, type)};
    } else {
        globals.unreferenceable[d.name] = "has dimension or cofibration parameters";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conversion

bool equal_tm(const Ctx& ctx, const TypePtr& type, const TermPtr& a, const TermPtr& b) {
    return conv(ctx.cx, ctx.eval_ty(type), ctx.eval(a), ctx.eval(b));
}

std::optional<PiComponents> injective_pi(const Ctx& ctx, const TypePtr& a, const TypePtr& b) {
    NfTyPtr na = reify_ty(ctx.cx, ctx.eval_ty(a));
    NfTyPtr nb = reify_ty(ctx.cx, ctx.eval_ty(b));
    if (!nf_is_pi(na)) throw NotAPi("not a function type: " + surface::print(embed(na), ctx.names));
    if (!nf_is_pi(nb)) throw NotAPi("not a function type: " + surface::print(embed(nb), ctx.names));
    if (serialize(na) != serialize(nb)) return std::nullopt;
    return PiComponents{{nf_dom(na), nf_dom(nb)}, {nf_cod(na), nf_cod(nb)}};
}

} // namespace cubical
