#include "cubical/syntax.hpp"

#include <sstream>

#include "cubical/errors.hpp"

namespace cubical {

std::string to_string(Dim d) {
    switch (d.kind) {
    case Dim::Kind::Zero: return "0";
    case Dim::Kind::One: return "1";
    default: return "#" + std::to_string(d.var);
    }
}

std::string to_string(Span span) {
    if (span.line == 0) return "<unknown>";
    return std::to_string(span.line) + ":" + std::to_string(span.column);
}

CofibPtr cof_eq(Dim r, Dim s) { return std::make_shared<Cofib>(Cofib{Cofib::Eq{r, s}}); }
CofibPtr cof_and(CofibPtr a, CofibPtr b) { return std::make_shared<Cofib>(Cofib{Cofib::And{std::move(a), std::move(b)}}); }
CofibPtr cof_or(CofibPtr a, CofibPtr b) { return std::make_shared<Cofib>(Cofib{Cofib::Or{std::move(a), std::move(b)}}); }
CofibPtr cof_forall(CofibPtr body, std::string name) {
    return std::make_shared<Cofib>(Cofib{Cofib::Forall{std::move(body), std::move(name)}});
}
CofibPtr cof_bot() { return cof_eq(Dim::zero(), Dim::one()); }
CofibPtr cof_top() { return cof_eq(Dim::one(), Dim::one()); }
CofibPtr partial_boundary(Dim r) { return cof_or(cof_eq(r, Dim::zero()), cof_eq(r, Dim::one())); }

namespace {
template <class T>
TermPtr mk(T node) {
    return std::make_shared<Term>(Term{std::move(node)});
}
template <class T>
TypePtr mkty(T node) {
    return std::make_shared<TypeExpr>(TypeExpr{std::move(node)});
}
} // namespace

namespace tm {
TermPtr var(int index) { return mk(Term::Var{index}); }
TermPtr lam(TermPtr body, std::string name) { return mk(Term::Lam{std::move(body), std::move(name)}); }
TermPtr app(TermPtr fn, TermPtr arg) { return mk(Term::App{std::move(fn), std::move(arg)}); }
TermPtr pair(TermPtr a, TermPtr b) { return mk(Term::Pair{std::move(a), std::move(b)}); }
TermPtr fst(TermPtr p) { return mk(Term::Fst{std::move(p)}); }
TermPtr snd(TermPtr p) { return mk(Term::Snd{std::move(p)}); }
TermPtr plam(TermPtr body, std::string name) { return mk(Term::PLam{std::move(body), std::move(name)}); }
TermPtr papp(TermPtr p, Dim r) { return mk(Term::PApp{std::move(p), r}); }
TermPtr englue(CofibPtr phi, TermPtr part, TermPtr total) {
    return mk(Term::Englue{std::move(phi), std::move(part), std::move(total)});
}
TermPtr unglue(CofibPtr phi, TermPtr equiv, TermPtr g) {
    return mk(Term::Unglue{std::move(phi), std::move(equiv), std::move(g)});
}
TermPtr base() { return mk(Term::Base{}); }
TermPtr loop(Dim r) { return mk(Term::Loop{r}); }
TermPtr ind_s1(TypePtr motive, TermPtr b, TermPtr l, TermPtr scrut, std::string motive_name, std::string loop_name) {
    return mk(Term::IndS1{std::move(motive), std::move(b), std::move(l), std::move(scrut), std::move(motive_name),
                          std::move(loop_name)});
}
TermPtr hcom(TypePtr type, Dim r, Dim s, CofibPtr phi, TermPtr tube, std::string name) {
    return mk(Term::HCom{std::move(type), r, s, std::move(phi), std::move(tube), std::move(name)});
}
TermPtr coe(TypePtr line, Dim r, Dim s, TermPtr arg, std::string name) {
    return mk(Term::Coe{std::move(line), r, s, std::move(arg), std::move(name)});
}
TermPtr system(std::vector<SysBranch<TermPtr>> branches) { return mk(Term::System{std::move(branches)}); }
} // namespace tm

namespace ty {
TypePtr path(TypePtr line, TermPtr a0, TermPtr a1, std::string name) {
    return mkty(TypeExpr::Path{std::move(line), std::move(a0), std::move(a1), std::move(name)});
}
TypePtr pi(TypePtr dom, TypePtr cod, std::string name) {
    return mkty(TypeExpr::Pi{std::move(dom), std::move(cod), std::move(name)});
}
TypePtr sigma(TypePtr dom, TypePtr cod, std::string name) {
    return mkty(TypeExpr::Sigma{std::move(dom), std::move(cod), std::move(name)});
}
TypePtr glue(CofibPtr phi, TypePtr base, TypePtr part, TermPtr equiv) {
    return mkty(TypeExpr::Glue{std::move(phi), std::move(base), std::move(part), std::move(equiv)});
}
TypePtr s1() { return mkty(TypeExpr::S1{}); }
TypePtr system(std::vector<SysBranch<TypePtr>> branches) { return mkty(TypeExpr::System{std::move(branches)}); }
} // namespace ty

// ---------------------------------------------------------------------------
// Actions

namespace {

struct Actor {
    const VarAction& a;

    Dim dim(Dim d, int depth) const {
        if (!d.is_var() || d.var < depth) return d;
        Dim out = a.on_dim(d.var - depth);
        if (out.is_var()) out.var += depth;
        return out;
    }

    int term_index(int k, int depth) const {
        if (k < depth) return k;
        return a.on_term(k - depth) + depth;
    }

    CofibPtr cof(const CofibPtr& c, int depth) const {
        return std::visit(
            [&](const auto& n) -> CofibPtr {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Cofib::Eq>) {
                    return cof_eq(dim(n.lhs, depth), dim(n.rhs, depth));
                } else if constexpr (std::is_same_v<N, Cofib::And>) {
                    return cof_and(cof(n.lhs, depth), cof(n.rhs, depth));
                } else if constexpr (std::is_same_v<N, Cofib::Or>) {
                    return cof_or(cof(n.lhs, depth), cof(n.rhs, depth));
                } else {
                    return cof_forall(cof(n.body, depth + 1), n.name);
                }
            },
            c->node);
    }

    template <class B, class F>
    std::vector<SysBranch<B>> sys(const std::vector<SysBranch<B>>& bs, int depth, F&& f) const {
        std::vector<SysBranch<B>> out;
        out.reserve(bs.size());
        for (const auto& b : bs) out.push_back({cof(b.cond, depth), f(b.body, depth)});
        return out;
    }

    TypePtr type(const TypePtr& t, int depth) const {
        return std::visit(
            [&](const auto& n) -> TypePtr {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, TypeExpr::Path>) {
                    return ty::path(type(n.line, depth + 1), term(n.a0, depth), term(n.a1, depth), n.name);
                } else if constexpr (std::is_same_v<N, TypeExpr::Pi>) {
                    return ty::pi(type(n.dom, depth), type(n.cod, depth + 1), n.name);
                } else if constexpr (std::is_same_v<N, TypeExpr::Sigma>) {
                    return ty::sigma(type(n.dom, depth), type(n.cod, depth + 1), n.name);
                } else if constexpr (std::is_same_v<N, TypeExpr::Glue>) {
                    return ty::glue(cof(n.phi, depth), type(n.base, depth), type(n.part, depth), term(n.equiv, depth));
                } else if constexpr (std::is_same_v<N, TypeExpr::S1>) {
                    return t;
                } else {
                    return ty::system(sys(n.branches, depth, [&](const TypePtr& b, int d) { return type(b, d); }));
                }
            },
            t->node);
    }

    TermPtr term(const TermPtr& t, int depth) const {
        return std::visit(
            [&](const auto& n) -> TermPtr {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Term::Var>) {
                    return tm::var(term_index(n.index, depth));
                } else if constexpr (std::is_same_v<N, Term::Lam>) {
                    return tm::lam(term(n.body, depth + 1), n.name);
                } else if constexpr (std::is_same_v<N, Term::App>) {
                    return tm::app(term(n.fn, depth), term(n.arg, depth));
                } else if constexpr (std::is_same_v<N, Term::Pair>) {
                    return tm::pair(term(n.fst, depth), term(n.snd, depth));
                } else if constexpr (std::is_same_v<N, Term::Fst>) {
                    return tm::fst(term(n.pair, depth));
                } else if constexpr (std::is_same_v<N, Term::Snd>) {
                    return tm::snd(term(n.pair, depth));
                } else if constexpr (std::is_same_v<N, Term::PLam>) {
                    return tm::plam(term(n.body, depth + 1), n.name);
                } else if constexpr (std::is_same_v<N, Term::PApp>) {
                    return tm::papp(term(n.path, depth), dim(n.r, depth));
                } else if constexpr (std::is_same_v<N, Term::Englue>) {
                    return tm::englue(cof(n.phi, depth), term(n.part, depth), term(n.total, depth));
                } else if constexpr (std::is_same_v<N, Term::Unglue>) {
                    return tm::unglue(cof(n.phi, depth), term(n.equiv, depth), term(n.glue, depth));
                } else if constexpr (std::is_same_v<N, Term::Base>) {
                    return t;
                } else if constexpr (std::is_same_v<N, Term::Loop>) {
                    return tm::loop(dim(n.r, depth));
                } else if constexpr (std::is_same_v<N, Term::IndS1>) {
                    return mk(Term::IndS1{type(n.motive, depth + 1), term(n.base_case, depth),
                                          term(n.loop_case, depth + 1), term(n.scrut, depth), n.motive_name,
                                          n.loop_name});
                } else if constexpr (std::is_same_v<N, Term::HCom>) {
                    return tm::hcom(type(n.type, depth), dim(n.r, depth), dim(n.s, depth), cof(n.phi, depth),
                                    term(n.tube, depth + 1), n.name);
                } else if constexpr (std::is_same_v<N, Term::Coe>) {
                    return tm::coe(type(n.line, depth + 1), dim(n.r, depth), dim(n.s, depth), term(n.arg, depth),
                                   n.name);
                } else {
                    return tm::system(sys(n.branches, depth, [&](const TermPtr& b, int d) { return term(b, d); }));
                }
            },
            t->node);
    }
};

} // namespace

TermPtr act(const TermPtr& t, const VarAction& a) { return Actor{a}.term(t, 0); }
TypePtr act(const TypePtr& t, const VarAction& a) { return Actor{a}.type(t, 0); }
CofibPtr act(const CofibPtr& c, const VarAction& a) { return Actor{a}.cof(c, 0); }
Dim act(Dim d, const VarAction& a) { return Actor{a}.dim(d, 0); }

VarAction shift_action(int by, int cutoff) {
    return VarAction{
        [by, cutoff](int k) { return Dim::var_of(k >= cutoff ? k + by : k); },
        [by, cutoff](int k) { return k >= cutoff ? k + by : k; },
    };
}

namespace {
VarAction subst_action(int slot, Dim r) {
    return VarAction{
        [slot, r](int k) {
            if (k < slot) return Dim::var_of(k);
            if (k == slot) return r;
            return Dim::var_of(k - 1);
        },
        [slot](int k) {
            if (k == slot) throw ScopeError("dimension variable used as a term");
            return k < slot ? k : k - 1;
        },
    };
}
} // namespace

TermPtr subst_dim(const TermPtr& t, int slot, Dim r) { return act(t, subst_action(slot, r)); }
TypePtr subst_dim(const TypePtr& t, int slot, Dim r) { return act(t, subst_action(slot, r)); }
CofibPtr subst_dim(const CofibPtr& c, int slot, Dim r) { return act(c, subst_action(slot, r)); }

TermPtr shift(const TermPtr& t, int by, int cutoff) { return by == 0 ? t : act(t, shift_action(by, cutoff)); }
TypePtr shift(const TypePtr& t, int by, int cutoff) { return by == 0 ? t : act(t, shift_action(by, cutoff)); }
CofibPtr shift(const CofibPtr& c, int by, int cutoff) { return by == 0 ? c : act(c, shift_action(by, cutoff)); }

namespace {
VarAction detector(int index, bool& hit) {
    return VarAction{
        [index, &hit](int k) {
            if (k == index) hit = true;
            return Dim::var_of(k);
        },
        [index, &hit](int k) {
            if (k == index) hit = true;
            return k;
        },
    };
}
} // namespace

bool occurs(const TermPtr& t, int index) {
    bool hit = false;
    act(t, detector(index, hit));
    return hit;
}

bool occurs(const TypePtr& t, int index) {
    bool hit = false;
    act(t, detector(index, hit));
    return hit;
}

// ---------------------------------------------------------------------------
// Scope checking

namespace {

struct Scoper {
    ScopeKinds ctx;

    void expect(int index, EntryKind kind) const {
        if (index < 0 || index >= static_cast<int>(ctx.size()))
            throw ScopeError("variable index " + std::to_string(index) + " out of range");
        if (ctx[ctx.size() - 1 - index] != kind)
            throw ScopeError(kind == EntryKind::Dim ? "term variable used as a dimension"
                                                    : "dimension variable used as a term");
    }

    void dim(Dim d) const {
        if (d.is_var()) expect(d.var, EntryKind::Dim);
    }

    template <class F>
    void under(EntryKind k, F&& f) {
        ctx.push_back(k);
        f();
        ctx.pop_back();
    }

    void cof(const CofibPtr& c) {
        std::visit(
            [&](const auto& n) {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Cofib::Eq>) {
                    dim(n.lhs);
                    dim(n.rhs);
                } else if constexpr (std::is_same_v<N, Cofib::Forall>) {
                    under(EntryKind::Dim, [&] { cof(n.body); });
                } else {
                    cof(n.lhs);
                    cof(n.rhs);
                }
            },
            c->node);
    }

    void type(const TypePtr& t) {
        std::visit(
            [&](const auto& n) {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, TypeExpr::Path>) {
                    under(EntryKind::Dim, [&] { type(n.line); });
                    term(n.a0);
                    term(n.a1);
                } else if constexpr (std::is_same_v<N, TypeExpr::Pi> || std::is_same_v<N, TypeExpr::Sigma>) {
                    type(n.dom);
                    under(EntryKind::Term, [&] { type(n.cod); });
                } else if constexpr (std::is_same_v<N, TypeExpr::Glue>) {
                    cof(n.phi);
                    type(n.base);
                    type(n.part);
                    term(n.equiv);
                } else if constexpr (std::is_same_v<N, TypeExpr::System>) {
                    for (const auto& b : n.branches) {
                        cof(b.cond);
                        type(b.body);
                    }
                }
            },
            t->node);
    }

    void term(const TermPtr& t) {
        std::visit(
            [&](const auto& n) {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Term::Var>) {
                    expect(n.index, EntryKind::Term);
                } else if constexpr (std::is_same_v<N, Term::Lam>) {
                    under(EntryKind::Term, [&] { term(n.body); });
                } else if constexpr (std::is_same_v<N, Term::App>) {
                    term(n.fn);
                    term(n.arg);
                } else if constexpr (std::is_same_v<N, Term::Pair>) {
                    term(n.fst);
                    term(n.snd);
                } else if constexpr (std::is_same_v<N, Term::Fst> || std::is_same_v<N, Term::Snd>) {
                    term(n.pair);
                } else if constexpr (std::is_same_v<N, Term::PLam>) {
                    under(EntryKind::Dim, [&] { term(n.body); });
                } else if constexpr (std::is_same_v<N, Term::PApp>) {
                    term(n.path);
                    dim(n.r);
                } else if constexpr (std::is_same_v<N, Term::Englue>) {
                    cof(n.phi);
                    term(n.part);
                    term(n.total);
                } else if constexpr (std::is_same_v<N, Term::Unglue>) {
                    cof(n.phi);
                    term(n.equiv);
                    term(n.glue);
                } else if constexpr (std::is_same_v<N, Term::Loop>) {
                    dim(n.r);
                } else if constexpr (std::is_same_v<N, Term::IndS1>) {
                    under(EntryKind::Term, [&] { type(n.motive); });
                    term(n.base_case);
                    under(EntryKind::Dim, [&] { term(n.loop_case); });
                    term(n.scrut);
                } else if constexpr (std::is_same_v<N, Term::HCom>) {
                    type(n.type);
                    dim(n.r);
                    dim(n.s);
                    cof(n.phi);
                    under(EntryKind::Dim, [&] { term(n.tube); });
                } else if constexpr (std::is_same_v<N, Term::Coe>) {
                    under(EntryKind::Dim, [&] { type(n.line); });
                    dim(n.r);
                    dim(n.s);
                    term(n.arg);
                } else if constexpr (std::is_same_v<N, Term::System>) {
                    for (const auto& b : n.branches) {
                        cof(b.cond);
                        term(b.body);
                    }
                }
            },
            t->node);
    }
};

} // namespace

void scope_check(const ScopeKinds& ctx, const TermPtr& t) { Scoper{ctx}.term(t); }
void scope_check(const ScopeKinds& ctx, const TypePtr& t) { Scoper{ctx}.type(t); }
void scope_check(const ScopeKinds& ctx, const CofibPtr& c) { Scoper{ctx}.cof(c); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render(std::ostream& os, const CofibPtr& c);
void render(std::ostream& os, const TypePtr& t);
void render(std::ostream& os, const TermPtr& t);

void render(std::ostream& os, const CofibPtr& c) {
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Cofib::Eq>) {
                os << "(= " << to_string(n.lhs) << ' ' << to_string(n.rhs) << ')';
            } else if constexpr (std::is_same_v<N, Cofib::And>) {
                os << "(and ";
                render(os, n.lhs);
                os << ' ';
                render(os, n.rhs);
                os << ')';
            } else if constexpr (std::is_same_v<N, Cofib::Or>) {
                os << "(or ";
                render(os, n.lhs);
                os << ' ';
                render(os, n.rhs);
                os << ')';
            } else {
                os << "(forall ";
                render(os, n.body);
                os << ')';
            }
        },
        c->node);
}

template <class B>
void render_sys(std::ostream& os, const std::vector<SysBranch<B>>& bs) {
    os << "(sys";
    for (const auto& b : bs) {
        os << " (";
        render(os, b.cond);
        os << ' ';
        render(os, b.body);
        os << ')';
    }
    os << ')';
}

void render(std::ostream& os, const TypePtr& t) {
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, TypeExpr::Path>) {
                os << "(path ";
                render(os, n.line);
                os << ' ';
                render(os, n.a0);
                os << ' ';
                render(os, n.a1);
                os << ')';
            } else if constexpr (std::is_same_v<N, TypeExpr::Pi> || std::is_same_v<N, TypeExpr::Sigma>) {
                os << (std::is_same_v<N, TypeExpr::Pi> ? "(pi " : "(sg ");
                render(os, n.dom);
                os << ' ';
                render(os, n.cod);
                os << ')';
            } else if constexpr (std::is_same_v<N, TypeExpr::Glue>) {
                os << "(glue ";
                render(os, n.phi);
                os << ' ';
                render(os, n.base);
                os << ' ';
                render(os, n.part);
                os << ' ';
                render(os, n.equiv);
                os << ')';
            } else if constexpr (std::is_same_v<N, TypeExpr::S1>) {
                os << "s1";
            } else {
                render_sys(os, n.branches);
            }
        },
        t->node);
}

void render(std::ostream& os, const TermPtr& t) {
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            auto un = [&](const char* head, const TermPtr& a) {
                os << '(' << head << ' ';
                render(os, a);
                os << ')';
            };
            if constexpr (std::is_same_v<N, Term::Var>) {
                os << '#' << n.index;
            } else if constexpr (std::is_same_v<N, Term::Lam>) {
                un("lam", n.body);
            } else if constexpr (std::is_same_v<N, Term::App>) {
                os << "(app ";
                render(os, n.fn);
                os << ' ';
                render(os, n.arg);
                os << ')';
            } else if constexpr (std::is_same_v<N, Term::Pair>) {
                os << "(pair ";
                render(os, n.fst);
                os << ' ';
                render(os, n.snd);
                os << ')';
            } else if constexpr (std::is_same_v<N, Term::Fst>) {
                un("fst", n.pair);
            } else if constexpr (std::is_same_v<N, Term::Snd>) {
                un("snd", n.pair);
            } else if constexpr (std::is_same_v<N, Term::PLam>) {
                un("plam", n.body);
            } else if constexpr (std::is_same_v<N, Term::PApp>) {
                os << "(papp ";
                render(os, n.path);
                os << ' ' << to_string(n.r) << ')';
            } else if constexpr (std::is_same_v<N, Term::Englue>) {
                os << "(englue ";
                render(os, n.phi);
                os << ' ';
                render(os, n.part);
                os << ' ';
                render(os, n.total);
                os << ')';
            } else if constexpr (std::is_same_v<N, Term::Unglue>) {
                os << "(unglue ";
                render(os, n.phi);
                os << ' ';
                render(os, n.equiv);
                os << ' ';
                render(os, n.glue);
                os << ')';
            } else if constexpr (std::is_same_v<N, Term::Base>) {
                os << "base";
            } else if constexpr (std::is_same_v<N, Term::Loop>) {
                os << "(loop " << to_string(n.r) << ')';
            } else if constexpr (std::is_same_v<N, Term::IndS1>) {
                os << "(ind ";
                render(os, n.motive);
                os << ' ';
                render(os, n.base_case);
                os << ' ';
                render(os, n.loop_case);
                os << ' ';
                render(os, n.scrut);
                os << ')';
            } else if constexpr (std::is_same_v<N, Term::HCom>) {
                os << "(hcom ";
                render(os, n.type);
                os << ' ' << to_string(n.r) << ' ' << to_string(n.s) << ' ';
                render(os, n.phi);
                os << ' ';
                render(os, n.tube);
                os << ')';
            } else if constexpr (std::is_same_v<N, Term::Coe>) {
                os << "(coe ";
                render(os, n.line);
                os << ' ' << to_string(n.r) << ' ' << to_string(n.s) << ' ';
                render(os, n.arg);
                os << ')';
            } else {
                render_sys(os, n.branches);
            }
        },
        t->node);
}

template <class T>
std::string render_string(const T& x) {
    std::ostringstream os;
    render(os, x);
    return os.str();
}

} // namespace

std::string to_sexpr(const TermPtr& t) { return render_string(t); }
std::string to_sexpr(const TypePtr& t) { return render_string(t); }
std::string to_sexpr(const CofibPtr& c) { return render_string(c); }

bool alpha_equal(const TermPtr& a, const TermPtr& b) { return to_sexpr(a) == to_sexpr(b); }
bool alpha_equal(const TypePtr& a, const TypePtr& b) { return to_sexpr(a) == to_sexpr(b); }

} // namespace cubical
