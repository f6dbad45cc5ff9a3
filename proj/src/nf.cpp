#include "cubical/nf.hpp"

#include <sstream>

#include "cubical/errors.hpp"

namespace cubical {

Dim flip_dim(Dim d, int depth) { return d.is_var() ? Dim::var_of(depth - 1 - d.var) : d; }

Conj flip_conj(const Conj& c, int depth) {
    Conj out;
    for (const auto& [a, b] : c.eqs) out.eqs.emplace_back(flip_dim(a, depth), flip_dim(b, depth));
    return out;
}

Cof flip_cof(const Cof& c, int depth) {
    Cof out;
    for (const auto& b : c.branches) out.branches.push_back(flip_conj(b, depth));
    return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void put(std::ostream& os, const NfTyPtr& t);
void put(std::ostream& os, const NfPtr& t);
void put(std::ostream& os, const NePtr& t);

template <class B>
void put_sys(std::ostream& os, const NfSystem<B>& sys) {
    os << "(sys";
    for (const auto& b : sys) {
        os << " (" << to_string(Cof{{b.cond}}) << ' ';
        put(os, b.body);
        os << ')';
    }
    os << ')';
}

void put(std::ostream& os, const NfTyPtr& t) {
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, NfTy::S1>) {
                os << "s1";
            } else if constexpr (std::is_same_v<N, NfTy::Path>) {
                os << "(path ";
                put(os, n.line);
                os << ' ';
                put(os, n.a0);
                os << ' ';
                put(os, n.a1);
                os << ')';
            } else if constexpr (std::is_same_v<N, NfTy::Pi> || std::is_same_v<N, NfTy::Sg>) {
                os << (std::is_same_v<N, NfTy::Pi> ? "(pi " : "(sg ");
                put(os, n.dom);
                os << ' ';
                put(os, n.cod);
                os << ')';
            } else {
                os << "(glue " << to_string(n.phi) << ' ';
                put(os, n.base);
                os << ' ';
                put_sys(os, n.part);
                os << ' ';
                put_sys(os, n.equiv);
                os << ')';
            }
        },
        t->node);
}

void put(std::ostream& os, const NfPtr& t) {
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Nf::Base>) {
                os << "base";
            } else if constexpr (std::is_same_v<N, Nf::Loop>) {
                os << "(loop " << to_string(n.r) << ')';
            } else if constexpr (std::is_same_v<N, Nf::FHCom>) {
                os << "(fhcom " << to_string(n.r) << ' ' << to_string(n.s) << ' ' << to_string(n.phi) << ' ';
                put_sys(os, n.tube);
                os << ')';
            } else if constexpr (std::is_same_v<N, Nf::Lam>) {
                os << "(lam ";
                put(os, n.body);
                os << ')';
            } else if constexpr (std::is_same_v<N, Nf::Pair>) {
                os << "(pair ";
                put(os, n.fst);
                os << ' ';
                put(os, n.snd);
                os << ')';
            } else if constexpr (std::is_same_v<N, Nf::PLam>) {
                os << "(plam ";
                put(os, n.body);
                os << ')';
            } else if constexpr (std::is_same_v<N, Nf::Englue>) {
                os << "(englue " << to_string(n.phi) << ' ';
                put_sys(os, n.part);
                os << ' ';
                put(os, n.total);
                os << ')';
            } else {
                os << "(lift " << to_string(n.phi) << ' ';
                put(os, n.ne);
                os << ' ';
                put_sys(os, n.part);
                os << ')';
            }
        },
        t->node);
}

void put(std::ostream& os, const NePtr& t) {
    std::visit(
        [&](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Ne::Var>) {
                os << '#' << n.index;
            } else if constexpr (std::is_same_v<N, Ne::App>) {
                os << "(app ";
                put(os, n.fn);
                os << ' ';
                put(os, n.arg);
                os << ')';
            } else if constexpr (std::is_same_v<N, Ne::Fst> || std::is_same_v<N, Ne::Snd>) {
                os << (std::is_same_v<N, Ne::Fst> ? "(fst " : "(snd ");
                put(os, n.pair);
                os << ')';
            } else if constexpr (std::is_same_v<N, Ne::PApp>) {
                os << "(papp ";
                put(os, n.path);
                os << ' ' << to_string(n.r) << ')';
            } else if constexpr (std::is_same_v<N, Ne::Unglue>) {
                os << "(unglue " << to_string(n.glue_phi) << ' ';
                put_sys(os, n.equiv);
                os << ' ';
                put(os, n.glue);
                os << ')';
            } else {
                os << "(ind ";
                put(os, n.motive);
                os << ' ';
                put(os, n.base_case);
                os << ' ';
                put(os, n.loop_case);
                os << ' ';
                put(os, n.scrut);
                os << ')';
            }
        },
        t->spine);
}

template <class T>
std::string render(const T& t) {
    std::ostringstream os;
    put(os, t);
    return os.str();
}

} // namespace

std::string serialize(const NfTyPtr& t) { return render(t); }
std::string serialize(const NfPtr& t) { return render(t); }
std::string serialize(const NePtr& t) { return render(t); }
std::string serialize(const Cof& c) { return to_string(c); }

bool operator==(const NfTy& a, const NfTy& b) {
    return serialize(std::make_shared<NfTy>(a)) == serialize(std::make_shared<NfTy>(b));
}
bool operator==(const Nf& a, const Nf& b) {
    return serialize(std::make_shared<Nf>(a)) == serialize(std::make_shared<Nf>(b));
}
bool operator==(const Ne& a, const Ne& b) {
    return serialize(std::make_shared<Ne>(a)) == serialize(std::make_shared<Ne>(b));
}

// ---------------------------------------------------------------------------
// Embedding

CofibPtr embed_cof(const Cof& c) {
    return to_cofib(c, [](Dim d) { return d; });
}

namespace {

template <class B>
std::vector<SysBranch<TermPtr>> embed_terms(const NfSystem<B>& sys) {
    std::vector<SysBranch<TermPtr>> out;
    for (const auto& b : sys) out.push_back({embed_cof(Cof{{b.cond}}), embed(b.body)});
    return out;
}

} // namespace

TypePtr embed(const NfTyPtr& t) {
    return std::visit(
        [&](const auto& n) -> TypePtr {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, NfTy::S1>) {
                return ty::s1();
            } else if constexpr (std::is_same_v<N, NfTy::Path>) {
                return ty::path(embed(n.line), embed(n.a0), embed(n.a1), n.name);
            } else if constexpr (std::is_same_v<N, NfTy::Pi>) {
                return ty::pi(embed(n.dom), embed(n.cod), n.name);
            } else if constexpr (std::is_same_v<N, NfTy::Sg>) {
                return ty::sigma(embed(n.dom), embed(n.cod), n.name);
            } else {
                std::vector<SysBranch<TypePtr>> part;
                for (const auto& b : n.part) part.push_back({embed_cof(Cof{{b.cond}}), embed(b.body)});
                return ty::glue(embed_cof(n.phi), embed(n.base), ty::system(std::move(part)),
                                tm::system(embed_terms(n.equiv)));
            }
        },
        t->node);
}

TermPtr embed(const NfPtr& t) {
    return std::visit(
        [&](const auto& n) -> TermPtr {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Nf::Base>) {
                return tm::base();
            } else if constexpr (std::is_same_v<N, Nf::Loop>) {
                return tm::loop(n.r);
            } else if constexpr (std::is_same_v<N, Nf::FHCom>) {
                return tm::hcom(ty::s1(), n.r, n.s, embed_cof(n.phi), tm::system(embed_terms(n.tube)), n.name);
            } else if constexpr (std::is_same_v<N, Nf::Lam>) {
                return tm::lam(embed(n.body), n.name);
            } else if constexpr (std::is_same_v<N, Nf::Pair>) {
                return tm::pair(embed(n.fst), embed(n.snd));
            } else if constexpr (std::is_same_v<N, Nf::PLam>) {
                return tm::plam(embed(n.body), n.name);
            } else if constexpr (std::is_same_v<N, Nf::Englue>) {
                return tm::englue(embed_cof(n.phi), tm::system(embed_terms(n.part)), embed(n.total));
            } else {
                return embed(n.ne);
            }
        },
        t->node);
}

TermPtr embed(const NePtr& t) {
    return std::visit(
        [&](const auto& n) -> TermPtr {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Ne::Var>) {
                return tm::var(n.index);
            } else if constexpr (std::is_same_v<N, Ne::App>) {
                return tm::app(embed(n.fn), embed(n.arg));
            } else if constexpr (std::is_same_v<N, Ne::Fst>) {
                return tm::fst(embed(n.pair));
            } else if constexpr (std::is_same_v<N, Ne::Snd>) {
                return tm::snd(embed(n.pair));
            } else if constexpr (std::is_same_v<N, Ne::PApp>) {
                return tm::papp(embed(n.path), n.r);
            } else if constexpr (std::is_same_v<N, Ne::Unglue>) {
                return tm::unglue(embed_cof(n.glue_phi), tm::system(embed_terms(n.equiv)), embed(n.glue));
            } else {
                return std::make_shared<Term>(Term{Term::IndS1{embed(n.motive), embed(n.base_case), embed(n.loop_case),
                                                               embed(n.scrut), n.motive_name, n.loop_name}});
            }
        },
        t->spine);
}

// ---------------------------------------------------------------------------
// Inspection

bool nf_is_pi(const NfTyPtr& t) { return std::holds_alternative<NfTy::Pi>(t->node); }

NfTyPtr nf_dom(const NfTyPtr& t) {
    if (auto* p = std::get_if<NfTy::Pi>(&t->node)) return p->dom;
    throw NotAPi("not a function type: " + serialize(t));
}

NfTyPtr nf_cod(const NfTyPtr& t) {
    if (auto* p = std::get_if<NfTy::Pi>(&t->node)) return p->cod;
    throw NotAPi("not a function type: " + serialize(t));
}

namespace {

struct Auditor {
    std::optional<std::string> failure;

    void fail(const std::string& msg) {
        if (!failure) failure = msg;
    }

    template <class B>
    void sys(const NfSystem<B>& s, int depth, const Congruence& cong) {
        for (const auto& b : s) {
            auto ext = assume(cong, flip_conj(b.cond, depth));
            if (!ext) {
                fail("inconsistent branch " + to_string(Cof{{b.cond}}));
                continue;
            }
            visit(b.body, depth, *ext);
        }
    }

    /// Over levels.
    Cof recompute(const NePtr& n, int depth) {
        return std::visit(
            [&](const auto& x) -> Cof {
                using N = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<N, Ne::Var>) {
                    return cof::bot();
                } else if constexpr (std::is_same_v<N, Ne::App>) {
                    return recompute(x.fn, depth);
                } else if constexpr (std::is_same_v<N, Ne::Fst> || std::is_same_v<N, Ne::Snd>) {
                    return recompute(x.pair, depth);
                } else if constexpr (std::is_same_v<N, Ne::PApp>) {
                    return cof::join(recompute(x.path, depth), cof::boundary(flip_dim(x.r, depth)));
                } else if constexpr (std::is_same_v<N, Ne::Unglue>) {
                    return cof::join(recompute(x.glue, depth), flip_cof(x.glue_phi, depth));
                } else {
                    return recompute(x.scrut, depth);
                }
            },
            n->spine);
    }

    void visit(const NePtr& n, int depth, const Congruence& cong) {
        // Recompute over levels, canonically relative to the context.
        Cof expected = flip_cof(relative(cong, recompute(n, depth)), depth);
        if (serialize(expected) != serialize(n->phi))
            fail("instability mismatch at " + serialize(n) + ": stored " + serialize(n->phi) + ", spine gives " +
                 serialize(expected));
        if (holds(cong, flip_cof(n->phi, depth))) fail("unstable neutral " + serialize(n));
        std::visit(
            [&](const auto& x) {
                using N = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<N, Ne::App>) {
                    visit(x.fn, depth, cong);
                    visit(x.arg, depth, cong);
                } else if constexpr (std::is_same_v<N, Ne::Fst> || std::is_same_v<N, Ne::Snd>) {
                    visit(x.pair, depth, cong);
                } else if constexpr (std::is_same_v<N, Ne::PApp>) {
                    visit(x.path, depth, cong);
                } else if constexpr (std::is_same_v<N, Ne::Unglue>) {
                    sys(x.equiv, depth, cong);
                    visit(x.glue, depth, cong);
                } else if constexpr (std::is_same_v<N, Ne::Ind>) {
                    visit(x.motive, depth + 1, cong);
                    visit(x.base_case, depth, cong);
                    visit(x.loop_case, depth + 1, cong);
                    visit(x.scrut, depth, cong);
                }
            },
            n->spine);
    }

    void visit(const NfTyPtr& t, int depth, const Congruence& cong) {
        std::visit(
            [&](const auto& x) {
                using N = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<N, NfTy::Path>) {
                    visit(x.line, depth + 1, cong);
                    visit(x.a0, depth, cong);
                    visit(x.a1, depth, cong);
                } else if constexpr (std::is_same_v<N, NfTy::Pi> || std::is_same_v<N, NfTy::Sg>) {
                    visit(x.dom, depth, cong);
                    visit(x.cod, depth + 1, cong);
                } else if constexpr (std::is_same_v<N, NfTy::Glue>) {
                    if (holds(cong, flip_cof(x.phi, depth))) fail("glue type with a true cofibration");
                    visit(x.base, depth, cong);
                    sys(x.part, depth, cong);
                    sys(x.equiv, depth, cong);
                }
            },
            t->node);
    }

    void visit(const NfPtr& t, int depth, const Congruence& cong) {
        std::visit(
            [&](const auto& x) {
                using N = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<N, Nf::Loop>) {
                    if (cong.rep(flip_dim(x.r, depth)).is_const()) fail("loop at an endpoint");
                } else if constexpr (std::is_same_v<N, Nf::FHCom>) {
                    Cof cap = cof::join(flip_cof(x.phi, depth), cof::eq(flip_dim(x.r, depth), flip_dim(x.s, depth)));
                    if (holds(cong, cap)) fail("fhcom on its boundary");
                    sys(x.tube, depth + 1, cong);
                } else if constexpr (std::is_same_v<N, Nf::Lam> || std::is_same_v<N, Nf::PLam>) {
                    visit(x.body, depth + 1, cong);
                } else if constexpr (std::is_same_v<N, Nf::Pair>) {
                    visit(x.fst, depth, cong);
                    visit(x.snd, depth, cong);
                } else if constexpr (std::is_same_v<N, Nf::Englue>) {
                    if (holds(cong, flip_cof(x.phi, depth))) fail("englue with a true cofibration");
                    sys(x.part, depth, cong);
                    visit(x.total, depth, cong);
                } else if constexpr (std::is_same_v<N, Nf::Lift>) {
                    if (serialize(x.phi) != serialize(x.ne->phi)) fail("lift cofibration differs from its neutral");
                    visit(x.ne, depth, cong);
                    sys(x.part, depth, cong);
                }
            },
            t->node);
    }
};

struct Sizer {
    std::size_t n = 0;
    template <class B>
    void sys(const NfSystem<B>& s) {
        for (const auto& b : s) go(b.body);
    }
    void go(const NfTyPtr& t) {
        ++n;
        std::visit(
            [&](const auto& x) {
                using N = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<N, NfTy::Path>) {
                    go(x.line);
                    go(x.a0);
                    go(x.a1);
                } else if constexpr (std::is_same_v<N, NfTy::Pi> || std::is_same_v<N, NfTy::Sg>) {
                    go(x.dom);
                    go(x.cod);
                } else if constexpr (std::is_same_v<N, NfTy::Glue>) {
                    go(x.base);
                    sys(x.part);
                    sys(x.equiv);
                }
            },
            t->node);
    }
    void go(const NePtr& t) {
        ++n;
        std::visit(
            [&](const auto& x) {
                using N = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<N, Ne::App>) {
                    go(x.fn);
                    go(x.arg);
                } else if constexpr (std::is_same_v<N, Ne::Fst> || std::is_same_v<N, Ne::Snd>) {
                    go(x.pair);
                } else if constexpr (std::is_same_v<N, Ne::PApp>) {
                    go(x.path);
                } else if constexpr (std::is_same_v<N, Ne::Unglue>) {
                    sys(x.equiv);
                    go(x.glue);
                } else if constexpr (std::is_same_v<N, Ne::Ind>) {
                    go(x.motive);
                    go(x.base_case);
                    go(x.loop_case);
                    go(x.scrut);
                }
            },
            t->spine);
    }
    void go(const NfPtr& t) {
        ++n;
        std::visit(
            [&](const auto& x) {
                using N = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<N, Nf::FHCom>) {
                    sys(x.tube);
                } else if constexpr (std::is_same_v<N, Nf::Lam> || std::is_same_v<N, Nf::PLam>) {
                    go(x.body);
                } else if constexpr (std::is_same_v<N, Nf::Pair>) {
                    go(x.fst);
                    go(x.snd);
                } else if constexpr (std::is_same_v<N, Nf::Englue>) {
                    sys(x.part);
                    go(x.total);
                } else if constexpr (std::is_same_v<N, Nf::Lift>) {
                    go(x.ne);
                    sys(x.part);
                }
            },
            t->node);
    }
};

} // namespace

std::optional<std::string> audit(const NfPtr& t, int depth, const Congruence& cong) {
    Auditor a;
    a.visit(t, depth, cong);
    return a.failure;
}

std::optional<std::string> audit(const NfTyPtr& t, int depth, const Congruence& cong) {
    Auditor a;
    a.visit(t, depth, cong);
    return a.failure;
}

std::size_t nf_size(const NfPtr& t) {
    Sizer s;
    s.go(t);
    return s.n;
}

} // namespace cubical
