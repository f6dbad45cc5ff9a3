#pragma once

// Semantic domain.
//
// Values mention dimension and term variables by de Bruijn level, so they
// stay valid when the context grows. Dimension identifications are not
// substituted into values: they live in the congruence of the context `Cx`,
// and every consumer first brings a value to weak head form relative to the
// current context (`whnf`). All closures and thunks receive the context in
// which they are forced.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubical/cof.hpp"
#include "cubical/syntax.hpp"

namespace cubical {

struct TyVal;
struct Val;
struct Neu;
class Cx;
using TyValue = std::shared_ptr<const TyVal>;
using Value = std::shared_ptr<const Val>;
using NeuPtr = std::shared_ptr<const Neu>;

using Thunk = std::function<Value(const Cx&)>;
using TyThunk = std::function<TyValue(const Cx&)>;
using DimClosure = std::function<Value(const Cx&, Dim)>;
using TyDimClosure = std::function<TyValue(const Cx&, Dim)>;
using ValClosure = std::function<Value(const Cx&, const Value&)>;
using TyValClosure = std::function<TyValue(const Cx&, const Value&)>;

struct TyVal {
    struct Path { TyDimClosure line; Value a0, a1; std::string name; };
    struct Pi { TyValue dom; TyValClosure cod; std::string name; };
    struct Sigma { TyValue dom; TyValClosure cod; std::string name; };
    /// `part` and `equiv` may only be forced where `phi` holds.
    struct Glue { Cof phi; TyValue base; TyThunk part; Thunk equiv; };
    struct S1 {};

    std::variant<Path, Pi, Sigma, Glue, S1> node;
};

struct Val {
    struct Lam { ValClosure body; std::string name; };
    struct Pair { Value fst, snd; };
    struct PLam { DimClosure body; std::string name; };
    struct Englue { Cof phi; Thunk part; Value total; };
    struct Base {};
    struct Loop { Dim r; };
    /// Formal composite in the circle; `tube` is defined under (i = r) \/ phi.
    struct FHCom { Dim r, s; Cof phi; DimClosure tube; std::string name; };
    /// Stabilized neutral: `ne` is its value away from `phi`, `partial` under it.
    struct Cut { NeuPtr ne; Cof phi; Thunk partial; TyValue type; };

    std::variant<Lam, Pair, PLam, Englue, Base, Loop, FHCom, Cut> node;
};

struct Neu {
    struct Var { int level; };
    struct App { NeuPtr fn; Value arg; TyValue dom; };
    struct Fst { NeuPtr pair; };
    struct Snd { NeuPtr pair; };
    struct PApp { NeuPtr path; Dim r; };
    /// `glue_type` is the (uncollapsed) type of the scrutinee.
    struct Unglue { NeuPtr glue; TyValue glue_type; };
    struct Ind {
        NeuPtr scrut;
        TyValClosure motive;
        Value base_case;
        DimClosure loop_case;
        std::string motive_name, loop_name;
    };

    std::variant<Var, App, Fst, Snd, PApp, Unglue, Ind> node;
};

/// The locus of instability of a neutral spine.
Cof instability(const Neu& n);

/// Opt-in audit of stabilized neutrals. While `active`, every cut that is
/// built or returned by `whnf` is checked: its stored cofibration must be
/// equivalent to the one recomputed from its spine, and must not hold in the
/// context at hand.
struct CutAudit {
    bool active = false;
    long checked = 0;
    long violations = 0;
    std::string first_violation;
};
CutAudit& cut_audit();

// ---------------------------------------------------------------------------
// Contexts

struct CxEntry {
    bool is_dim = false;
    TyValue type;  // null for dimensions
    std::string name;
};

class Cx {
public:
    [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }
    [[nodiscard]] const CxEntry& at_level(int level) const { return entries_.at(level); }
    [[nodiscard]] const Congruence& cong() const { return cong_; }

    /// The level the next binder will receive.
    [[nodiscard]] Dim fresh_dim() const { return Dim::var_of(size()); }
    [[nodiscard]] Cx extend_dim(std::string name = "i") const;
    [[nodiscard]] Cx extend_term(TyValue type, std::string name = "x") const;

    [[nodiscard]] std::optional<Cx> assume(const Conj& c) const;
    /// One consistent context per branch of `c`.
    [[nodiscard]] std::vector<std::pair<Conj, Cx>> split(const Cof& c) const;

    [[nodiscard]] Dim canon(Dim d) const { return cong_.rep(d); }
    [[nodiscard]] Cof canon(const Cof& c) const { return relative(cong_, c); }
    [[nodiscard]] bool entails(const Cof& c) const { return holds(cong_, c); }
    [[nodiscard]] bool entails_eq(Dim r, Dim s) const { return cong_.equal(r, s); }

    /// Level to index in this context.
    [[nodiscard]] int index_of(int level) const { return size() - 1 - level; }
    [[nodiscard]] Dim dim_to_index(Dim d) const;

private:
    std::vector<CxEntry> entries_;
    Congruence cong_;
};

// ---------------------------------------------------------------------------
// Environments: persistent lists, innermost entry first.

using EnvEntry = std::variant<Dim, Value>;

struct EnvNode;
using Env = std::shared_ptr<const EnvNode>;
struct EnvNode {
    EnvEntry entry;
    Env next;
};

Env env_push(const Env& env, EnvEntry e);
const EnvEntry& env_lookup(const Env& env, int index);

// ---------------------------------------------------------------------------
// Construction and weak head forms

namespace val {
Value lam(ValClosure body, std::string name = "x");
Value pair(Value a, Value b);
Value plam(DimClosure body, std::string name = "i");
Value base();
} // namespace val

namespace tyval {
TyValue s1();
TyValue pi(TyValue dom, TyValClosure cod, std::string name = "x");
TyValue sigma(TyValue dom, TyValClosure cod, std::string name = "x");
TyValue path(TyDimClosure line, Value a0, Value a1, std::string name = "i");
/// Non-dependent function and pair types and constant paths.
TyValue arrow(TyValue dom, TyValue cod);
TyValue times(TyValue a, TyValue b);
TyValue const_path(TyValue a, Value a0, Value a1);
} // namespace tyval

TyValue whnf_ty(const Cx& cx, const TyValue& a);
Value whnf(const Cx& cx, const Value& v);

Value mk_loop(const Cx& cx, Dim r);
Value mk_englue(const Cx& cx, const Cof& phi, Thunk part, Value total);
Value mk_fhcom(const Cx& cx, Dim r, Dim s, const Cof& phi, DimClosure tube, std::string name = "i");

/// Turns a neutral into a value of type `a`: eta-expands at Pi, Sigma and
/// Path, and forces the partial value if `phi` already holds.
Value reflect(const Cx& cx, const TyValue& a, const Cof& phi, NeuPtr ne, Thunk partial);
/// The generic element for the variable at `level`.
Value reflect_var(const Cx& cx, const TyValue& a, int level);

/// A thunk for a partial value that can never be forced.
Thunk absurd_thunk();

// ---------------------------------------------------------------------------
// Eliminators

Value do_app(const Cx& cx, const Value& f, const Value& a);
Value do_fst(const Cx& cx, const Value& p);
Value do_snd(const Cx& cx, const Value& p);
Value do_papp(const Cx& cx, const Value& p, Dim r);
/// `phi` and `equiv` describe the glue type of `g`.
Value do_unglue(const Cx& cx, const Cof& phi, const Thunk& equiv, const Value& g);
Value do_ind(const Cx& cx, const TyValClosure& motive, const Value& b, const DimClosure& loop, const Value& scrut,
             const std::string& motive_name = "x", const std::string& loop_name = "i");

// ---------------------------------------------------------------------------
// Evaluation

Value eval(const Cx& cx, const Env& env, const TermPtr& t);
TyValue eval_ty(const Cx& cx, const Env& env, const TypePtr& t);
Cof eval_cof(const Cx& cx, const Env& env, const CofibPtr& c);
Dim eval_dim(const Env& env, Dim d);

/// Environment holding the generic element of every entry of `cx`.
Env init_env(const Cx& cx);

// ---------------------------------------------------------------------------
// Equivalences

TyValue is_contr_type(const TyValue& a);
TyValue fiber_type(const TyValue& a, const TyValue& b, const Value& f, const Value& y);
TyValue equiv_type(const TyValue& a, const TyValue& b);

} // namespace cubical
