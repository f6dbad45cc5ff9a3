#include "cubical/nbe.hpp"

#include "cubical/errors.hpp"

namespace cubical {

namespace {

Cof idx_cof(const Cx& cx, const Cof& c) { return flip_cof(cx.canon(c), cx.size()); }
Dim idx_dim(const Cx& cx, Dim d) { return flip_dim(cx.canon(d), cx.size()); }

template <class F>
auto per_branch(const Cx& cx, const Cof& phi, F&& f) {
    using B = decltype(f(cx));
    NfSystem<B> out;
    for (const auto& [conj, sub] : cx.split(phi)) out.push_back({flip_conj(conj, cx.size()), f(sub)});
    return out;
}

NfTyPtr mkty(NfTy t) { return std::make_shared<NfTy>(std::move(t)); }
NfPtr mknf(Nf t) { return std::make_shared<Nf>(std::move(t)); }

std::string lam_name(const Cx& cx, const Value& v, const std::string& fallback) {
    Value w = whnf(cx, v);
    if (auto* l = std::get_if<Val::Lam>(&w->node)) return l->name;
    if (auto* p = std::get_if<Val::PLam>(&w->node)) return p->name;
    return fallback;
}

NfSystem<NfPtr> equiv_system(const Cx& cx, const TyVal::Glue& g) {
    return per_branch(cx, g.phi, [&](const Cx& c) { return reify(c, equiv_type(g.part(c), g.base), g.equiv(c)); });
}

} // namespace

NfTyPtr reify_ty(const Cx& cx, const TyValue& a) {
    TyValue ty = whnf_ty(cx, a);
    return std::visit(
        [&](const auto& t) -> NfTyPtr {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TyVal::S1>) {
                return mkty(NfTy{NfTy::S1{}});
            } else if constexpr (std::is_same_v<T, TyVal::Pi> || std::is_same_v<T, TyVal::Sigma>) {
                Cx inner = cx.extend_term(t.dom, t.name);
                Value x = reflect_var(inner, t.dom, cx.size());
                NfTyPtr dom = reify_ty(cx, t.dom);
                NfTyPtr cod = reify_ty(inner, t.cod(inner, x));
                if constexpr (std::is_same_v<T, TyVal::Pi>) {
                    return mkty(NfTy{NfTy::Pi{dom, cod, t.name}});
                } else {
                    return mkty(NfTy{NfTy::Sg{dom, cod, t.name}});
                }
            } else if constexpr (std::is_same_v<T, TyVal::Path>) {
                Cx inner = cx.extend_dim(t.name);
                NfTyPtr line = reify_ty(inner, t.line(inner, Dim::var_of(cx.size())));
                return mkty(NfTy{NfTy::Path{line, reify(cx, t.line(cx, Dim::zero()), t.a0),
                                            reify(cx, t.line(cx, Dim::one()), t.a1), t.name}});
            } else {
                auto part = per_branch(cx, t.phi, [&](const Cx& c) { return reify_ty(c, t.part(c)); });
                return mkty(NfTy{NfTy::Glue{idx_cof(cx, t.phi), reify_ty(cx, t.base), part, equiv_system(cx, t)}});
            }
        },
        ty->node);
}

NfPtr reify(const Cx& cx, const TyValue& a, const Value& v) {
    TyValue ty = whnf_ty(cx, a);
    return std::visit(
        [&](const auto& t) -> NfPtr {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TyVal::Pi>) {
                std::string name = lam_name(cx, v, t.name);
                Cx inner = cx.extend_term(t.dom, name);
                Value x = reflect_var(inner, t.dom, cx.size());
                return mknf(Nf{Nf::Lam{reify(inner, t.cod(inner, x), do_app(inner, v, x)), name}});
            } else if constexpr (std::is_same_v<T, TyVal::Sigma>) {
                Value a0 = do_fst(cx, v);
                return mknf(Nf{Nf::Pair{reify(cx, t.dom, a0), reify(cx, t.cod(cx, a0), do_snd(cx, v))}});
            } else if constexpr (std::is_same_v<T, TyVal::Path>) {
                std::string name = lam_name(cx, v, t.name);
                Cx inner = cx.extend_dim(name);
                Dim i = Dim::var_of(cx.size());
                return mknf(Nf{Nf::PLam{reify(inner, t.line(inner, i), do_papp(inner, v, i)), name}});
            } else if constexpr (std::is_same_v<T, TyVal::Glue>) {
                auto part = per_branch(cx, t.phi, [&](const Cx& c) { return reify(c, t.part(c), v); });
                NfPtr total = reify(cx, t.base, do_unglue(cx, t.phi, t.equiv, v));
                return mknf(Nf{Nf::Englue{idx_cof(cx, t.phi), part, total}});
            } else {
                Value w = whnf(cx, v);
                return std::visit(
                    [&](const auto& x) -> NfPtr {
                        using X = std::decay_t<decltype(x)>;
                        if constexpr (std::is_same_v<X, Val::Base>) {
                            return mknf(Nf{Nf::Base{}});
                        } else if constexpr (std::is_same_v<X, Val::Loop>) {
                            return mknf(Nf{Nf::Loop{idx_dim(cx, x.r)}});
                        } else if constexpr (std::is_same_v<X, Val::FHCom>) {
                            Cx inner = cx.extend_dim(x.name);
                            Dim k = Dim::var_of(cx.size());
                            auto tube = per_branch(inner, cof::join(cof::eq(k, x.r), x.phi),
                                                   [&](const Cx& c) { return reify(c, tyval::s1(), x.tube(c, k)); });
                            return mknf(Nf{Nf::FHCom{idx_dim(cx, x.r), idx_dim(cx, x.s), idx_cof(cx, x.phi), tube,
                                                     x.name}});
                        } else if constexpr (std::is_same_v<X, Val::Cut>) {
                            Cof phi = instability(*x.ne);
                            auto part = per_branch(cx, phi, [&](const Cx& c) { return reify(c, tyval::s1(), w); });
                            return mknf(Nf{Nf::Lift{idx_cof(cx, phi), reify_ne(cx, x.ne), part}});
                        } else {
                            throw DomainError("reification of a non-circle value at the circle");
                        }
                    },
                    w->node);
            }
        },
        ty->node);
}

NePtr reify_ne(const Cx& cx, const NeuPtr& n) {
    Ne out;
    out.phi = idx_cof(cx, instability(*n));
    out.spine = std::visit(
        [&](const auto& x) -> decltype(out.spine) {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, Neu::Var>) {
                return Ne::Var{cx.index_of(x.level)};
            } else if constexpr (std::is_same_v<X, Neu::App>) {
                return Ne::App{reify_ne(cx, x.fn), reify(cx, x.dom, x.arg)};
            } else if constexpr (std::is_same_v<X, Neu::Fst>) {
                return Ne::Fst{reify_ne(cx, x.pair)};
            } else if constexpr (std::is_same_v<X, Neu::Snd>) {
                return Ne::Snd{reify_ne(cx, x.pair)};
            } else if constexpr (std::is_same_v<X, Neu::PApp>) {
                return Ne::PApp{reify_ne(cx, x.path), idx_dim(cx, x.r)};
            } else if constexpr (std::is_same_v<X, Neu::Unglue>) {
                const auto& g = std::get<TyVal::Glue>(x.glue_type->node);
                return Ne::Unglue{idx_cof(cx, g.phi), equiv_system(cx, g), reify_ne(cx, x.glue)};
            } else {
                Cx with_x = cx.extend_term(tyval::s1(), x.motive_name);
                Value var = reflect_var(with_x, tyval::s1(), cx.size());
                NfTyPtr motive = reify_ty(with_x, x.motive(with_x, var));
                NfPtr b = reify(cx, x.motive(cx, val::base()), x.base_case);
                Cx with_i = cx.extend_dim(x.loop_name);
                Dim i = Dim::var_of(cx.size());
                NfPtr l = reify(with_i, x.motive(with_i, mk_loop(with_i, i)), x.loop_case(with_i, i));
                return Ne::Ind{motive, b, l, reify_ne(cx, x.scrut), x.motive_name, x.loop_name};
            }
        },
        n->node);
    return std::make_shared<Ne>(std::move(out));
}

NfTyPtr nbe_ty(const Cx& cx, const TypePtr& t) { return reify_ty(cx, eval_ty(cx, init_env(cx), t)); }

NfPtr nbe_tm(const Cx& cx, const TypePtr& type, const TermPtr& t) {
    Env env = init_env(cx);
    return reify(cx, eval_ty(cx, env, type), eval(cx, env, t));
}

bool conv_ty(const Cx& cx, const TyValue& a, const TyValue& b) {
    return serialize(reify_ty(cx, a)) == serialize(reify_ty(cx, b));
}

bool conv(const Cx& cx, const TyValue& a, const Value& u, const Value& v) {
    return serialize(reify(cx, a, u)) == serialize(reify(cx, a, v));
}

NfTyPtr boundary_normalize(const Cx& cx, const NfTyPtr& t) { return nbe_ty(cx, embed(t)); }

NfPtr boundary_normalize(const Cx& cx, const TypePtr& type, const NfPtr& t) { return nbe_tm(cx, type, embed(t)); }

bool nf_equal(const Cx& cx, const NfTyPtr& a, const NfTyPtr& b, const Cof& hyp) {
    for (const auto& [conj, sub] : cx.split(hyp))
        if (serialize(boundary_normalize(sub, a)) != serialize(boundary_normalize(sub, b))) return false;
    return true;
}

bool nf_equal(const Cx& cx, const TypePtr& type, const NfPtr& a, const NfPtr& b, const Cof& hyp) {
    for (const auto& [conj, sub] : cx.split(hyp))
        if (serialize(boundary_normalize(sub, type, a)) != serialize(boundary_normalize(sub, type, b))) return false;
    return true;
}

} // namespace cubical
