#pragma once

// Core syntax: nameless terms, types, and cofibrations.
//
// Every binder (term variable, dimension variable, cofibration quantifier)
// occupies one slot of a single telescope; variables are de Bruijn indices
// into it. Names are display hints only.

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cubical/dim.hpp"

namespace cubical {

struct Cofib;
struct Term;
struct TypeExpr;
using CofibPtr = std::shared_ptr<const Cofib>;
using TermPtr = std::shared_ptr<const Term>;
using TypePtr = std::shared_ptr<const TypeExpr>;

struct Cofib {
    struct Eq { Dim lhs, rhs; };
    struct And { CofibPtr lhs, rhs; };
    struct Or { CofibPtr lhs, rhs; };
    /// Binds one dimension for `body`.
    struct Forall { CofibPtr body; std::string name; };

    std::variant<Eq, And, Or, Forall> node;
};

CofibPtr cof_eq(Dim r, Dim s);
CofibPtr cof_and(CofibPtr a, CofibPtr b);
CofibPtr cof_or(CofibPtr a, CofibPtr b);
CofibPtr cof_forall(CofibPtr body, std::string name = "i");
CofibPtr cof_bot();
CofibPtr cof_top();
/// (r = 0) \/ (r = 1)
CofibPtr partial_boundary(Dim r);

template <class Body>
struct SysBranch {
    CofibPtr cond;
    Body body;
};

struct TypeExpr {
    /// `line` binds a dimension.
    struct Path { TypePtr line; TermPtr a0, a1; std::string name; };
    /// `cod` binds a term variable of type `dom`.
    struct Pi { TypePtr dom, cod; std::string name; };
    struct Sigma { TypePtr dom, cod; std::string name; };
    /// `part` and `equiv` are meaningful only where `phi` holds.
    struct Glue { CofibPtr phi; TypePtr base, part; TermPtr equiv; };
    struct S1 {};
    struct System { std::vector<SysBranch<TypePtr>> branches; };

    std::variant<Path, Pi, Sigma, Glue, S1, System> node;
};

struct Term {
    struct Var { int index; };
    struct Lam { TermPtr body; std::string name; };
    struct App { TermPtr fn, arg; };
    struct Pair { TermPtr fst, snd; };
    struct Fst { TermPtr pair; };
    struct Snd { TermPtr pair; };
    struct PLam { TermPtr body; std::string name; };
    struct PApp { TermPtr path; Dim r; };
    /// Element of Glue(phi, ...): `part` lives under phi, `total` in the base.
    struct Englue { CofibPtr phi; TermPtr part, total; };
    /// Carries the glue cofibration and the equivalence (under phi) of the
    /// scrutinee's type, so that unglue still computes once phi holds.
    struct Unglue { CofibPtr phi; TermPtr equiv, glue; };
    struct Base {};
    struct Loop { Dim r; };
    /// `motive` binds x : S1, `loop_case` binds a dimension.
    struct IndS1 { TypePtr motive; TermPtr base_case, loop_case, scrut; std::string motive_name, loop_name; };
    /// `tube` binds a dimension and is defined under (i = r) \/ phi.
    struct HCom { TypePtr type; Dim r, s; CofibPtr phi; TermPtr tube; std::string name; };
    /// `line` binds a dimension.
    struct Coe { TypePtr line; Dim r, s; TermPtr arg; std::string name; };
    /// An empty system is the eliminator of the false cofibration.
    struct System { std::vector<SysBranch<TermPtr>> branches; };

    std::variant<Var, Lam, App, Pair, Fst, Snd, PLam, PApp, Englue, Unglue, Base, Loop, IndS1, HCom, Coe, System>
        node;
};

namespace tm {
TermPtr var(int index);
TermPtr lam(TermPtr body, std::string name = "x");
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr pair(TermPtr a, TermPtr b);
TermPtr fst(TermPtr p);
TermPtr snd(TermPtr p);
TermPtr plam(TermPtr body, std::string name = "i");
TermPtr papp(TermPtr p, Dim r);
TermPtr englue(CofibPtr phi, TermPtr part, TermPtr total);
TermPtr unglue(CofibPtr phi, TermPtr equiv, TermPtr g);
TermPtr base();
TermPtr loop(Dim r);
TermPtr ind_s1(TypePtr motive, TermPtr b, TermPtr l, TermPtr scrut, std::string motive_name = "x",
               std::string loop_name = "i");
TermPtr hcom(TypePtr ty, Dim r, Dim s, CofibPtr phi, TermPtr tube, std::string name = "i");
TermPtr coe(TypePtr line, Dim r, Dim s, TermPtr arg, std::string name = "i");
TermPtr system(std::vector<SysBranch<TermPtr>> branches);
} // namespace tm

namespace ty {
TypePtr path(TypePtr line, TermPtr a0, TermPtr a1, std::string name = "i");
TypePtr pi(TypePtr dom, TypePtr cod, std::string name = "x");
TypePtr sigma(TypePtr dom, TypePtr cod, std::string name = "x");
TypePtr glue(CofibPtr phi, TypePtr base, TypePtr part, TermPtr equiv);
TypePtr s1();
TypePtr system(std::vector<SysBranch<TypePtr>> branches);
} // namespace ty

// ---------------------------------------------------------------------------
// Renaming and substitution

enum class EntryKind : unsigned char { Dim, Term };

/// A simultaneous action on the free variables of a term. Indices are
/// relative to the outside of the term; results are expressed in the target
/// telescope.
struct VarAction {
    std::function<Dim(int index)> on_dim;
    std::function<int(int index)> on_term;
};

TermPtr act(const TermPtr& t, const VarAction& a);
TypePtr act(const TypePtr& t, const VarAction& a);
CofibPtr act(const CofibPtr& c, const VarAction& a);
Dim act(Dim d, const VarAction& a);

/// Weakening: indices >= cutoff are shifted by `by`.
VarAction shift_action(int by, int cutoff = 0);

/// Replaces the variable at index `slot` by `r` and removes the slot from the
/// telescope. `r` is expressed in the telescope after removal.
TermPtr subst_dim(const TermPtr& t, int slot, Dim r);
TypePtr subst_dim(const TypePtr& t, int slot, Dim r);
CofibPtr subst_dim(const CofibPtr& c, int slot, Dim r);

TermPtr shift(const TermPtr& t, int by, int cutoff = 0);
TypePtr shift(const TypePtr& t, int by, int cutoff = 0);
CofibPtr shift(const CofibPtr& c, int by, int cutoff = 0);

/// Whether the variable at `index` occurs free.
bool occurs(const TermPtr& t, int index);
bool occurs(const TypePtr& t, int index);

// ---------------------------------------------------------------------------
// Scope checking

/// Kinds of the telescope entries, outermost first.
using ScopeKinds = std::vector<EntryKind>;

/// Throws ScopeError on an out-of-range index or a sort mismatch.
void scope_check(const ScopeKinds& ctx, const TermPtr& t);
void scope_check(const ScopeKinds& ctx, const TypePtr& t);
void scope_check(const ScopeKinds& ctx, const CofibPtr& c);

// ---------------------------------------------------------------------------
// Debug rendering (nameless, fully parenthesized). Two terms are
// alpha-equivalent iff their renderings coincide.

std::string to_sexpr(const TermPtr& t);
std::string to_sexpr(const TypePtr& t);
std::string to_sexpr(const CofibPtr& c);

bool alpha_equal(const TermPtr& a, const TermPtr& b);
bool alpha_equal(const TypePtr& a, const TypePtr& b);

} // namespace cubical
