#pragma once

// Normal and neutral forms.
//
// Variables and dimensions are de Bruijn indices. Cofibrations are canonical
// (see cof.hpp) but phrased over indices; partial subterms are stored as one
// body per branch of their cofibration, each normalized under that branch.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubical/cof.hpp"
#include "cubical/syntax.hpp"

namespace cubical {

struct NfTy;
struct Nf;
struct Ne;
using NfTyPtr = std::shared_ptr<const NfTy>;
using NfPtr = std::shared_ptr<const Nf>;
using NePtr = std::shared_ptr<const Ne>;

template <class Body>
struct NfBranch {
    Conj cond;
    Body body;
};

template <class Body>
using NfSystem = std::vector<NfBranch<Body>>;

struct NfTy {
    struct S1 {};
    struct Path { NfTyPtr line; NfPtr a0, a1; std::string name; };
    struct Pi { NfTyPtr dom, cod; std::string name; };
    struct Sg { NfTyPtr dom, cod; std::string name; };
    struct Glue { Cof phi; NfTyPtr base; NfSystem<NfTyPtr> part; NfSystem<NfPtr> equiv; };

    std::variant<S1, Path, Pi, Sg, Glue> node;
};

struct Nf {
    struct Base {};
    struct Loop { Dim r; };
    /// `tube` lives under one dimension binder.
    struct FHCom { Dim r, s; Cof phi; NfSystem<NfPtr> tube; std::string name; };
    struct Lam { NfPtr body; std::string name; };
    struct Pair { NfPtr fst, snd; };
    struct PLam { NfPtr body; std::string name; };
    struct Englue { Cof phi; NfSystem<NfPtr> part; NfPtr total; };
    struct Lift { Cof phi; NePtr ne; NfSystem<NfPtr> part; };

    std::variant<Base, Loop, FHCom, Lam, Pair, PLam, Englue, Lift> node;
};

struct Ne {
    struct Var { int index; };
    struct App { NePtr fn; NfPtr arg; };
    struct Fst { NePtr pair; };
    struct Snd { NePtr pair; };
    struct PApp { NePtr path; Dim r; };
    struct Unglue { Cof glue_phi; NfSystem<NfPtr> equiv; NePtr glue; };
    /// `motive` binds a term variable, `loop_case` a dimension.
    struct Ind { NfTyPtr motive; NfPtr base_case, loop_case; NePtr scrut; std::string motive_name, loop_name; };

    /// Locus of instability.
    Cof phi;
    std::variant<Var, App, Fst, Snd, PApp, Unglue, Ind> spine;
};

/// Converts a cofibration between level and index form at the given depth.
/// The conversion is its own inverse.
Cof flip_cof(const Cof& c, int depth);
Conj flip_conj(const Conj& c, int depth);
Dim flip_dim(Dim d, int depth);

// ---------------------------------------------------------------------------
// Serialization

std::string serialize(const NfTyPtr& t);
std::string serialize(const NfPtr& t);
std::string serialize(const NePtr& t);
/// Cofibration over indices.
std::string serialize(const Cof& c);

/// Structural equality (ignores name hints).
bool operator==(const NfTy& a, const NfTy& b);
bool operator==(const Nf& a, const Nf& b);
bool operator==(const Ne& a, const Ne& b);

// ---------------------------------------------------------------------------
// Embedding back into core syntax

TypePtr embed(const NfTyPtr& t);
TermPtr embed(const NfPtr& t);
TermPtr embed(const NePtr& t);
CofibPtr embed_cof(const Cof& c);

// ---------------------------------------------------------------------------
// Inspection

/// Whether the type is a Pi. Glue types never satisfy this, since a glue
/// whose cofibration holds is not a normal form.
bool nf_is_pi(const NfTyPtr& t);
/// Throws NotAPi unless `nf_is_pi(t)`.
NfTyPtr nf_dom(const NfTyPtr& t);
NfTyPtr nf_cod(const NfTyPtr& t);

/// Checks the neutral invariants of a normal form produced at `depth` under
/// the equations in `cong` (over levels): every stored instability equals
/// the one recomputed from its spine, and none holds where it occurs.
/// Returns a description of the first violation.
std::optional<std::string> audit(const NfPtr& t, int depth, const Congruence& cong);
std::optional<std::string> audit(const NfTyPtr& t, int depth, const Congruence& cong);

/// Number of nodes, for statistics and generators.
std::size_t nf_size(const NfPtr& t);

} // namespace cubical
