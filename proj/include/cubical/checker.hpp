#pragma once

// Bidirectional elaboration of surface syntax into core syntax.
//
// Cofibration hypotheses never enter the context: checking under a
// hypothesis splits the context into one branch per disjunct and elaborates
// in each. When the branches elaborate differently the result is a system
// over the branch conditions.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubical/domain.hpp"
#include "cubical/nf.hpp"
#include "cubical/surface.hpp"

namespace cubical {

/// A top-level definition usable from later declarations: closed and
/// abstracted over its term parameters.
struct GlobalDef {
    TermPtr term;
    TypePtr type;
    TyValue type_value;
};

struct Globals {
    std::map<std::string, GlobalDef> defs;
    std::map<std::string, TypePtr> types;
    /// Declarations with dimension or cofibration parameters.
    std::map<std::string, std::string> unreferenceable;
};

/// Checking context: the semantic context, the generic environment over it,
/// and the source names of its entries (outermost first).
struct Ctx {
    Cx cx;
    Env env;
    std::vector<std::string> names;
    const Globals* globals = nullptr;

    [[nodiscard]] Ctx extend_dim(const std::string& name) const;
    [[nodiscard]] Ctx extend_term(const std::string& name, const TyValue& type) const;
    /// One context per branch of `c` under the current congruence.
    [[nodiscard]] std::vector<std::pair<Conj, Ctx>> split(const Cof& c) const;

    [[nodiscard]] Value eval(const TermPtr& t) const;
    [[nodiscard]] TyValue eval_ty(const TypePtr& t) const;
    [[nodiscard]] Cof eval_cof(const CofibPtr& c) const;
    [[nodiscard]] Dim eval_dim(Dim index) const;

    /// Level-form cofibration as core syntax over this context.
    [[nodiscard]] CofibPtr quote_cof(const Cof& c) const;
    [[nodiscard]] std::string show(const TyValue& a) const;
    [[nodiscard]] std::string show(const TyValue& a, const Value& v) const;
    [[nodiscard]] std::string show(const Cof& c) const;
};

Ctx empty_ctx(const Globals& globals);

TypePtr check_ty(const Ctx& ctx, const surface::SPtr& s);
TermPtr check(const Ctx& ctx, const surface::SPtr& s, const TyValue& type);
std::pair<TermPtr, TyValue> infer(const Ctx& ctx, const surface::SPtr& s);
CofibPtr check_cof(const Ctx& ctx, const surface::SCofPtr& c);
Dim check_dim(const Ctx& ctx, const surface::SDim& d);

/// One elaborated instance of a declaration per branch of its cofibration
/// parameters (a single branch when there are none).
struct CheckedBranch {
    Ctx ctx;
    std::string label;  // the branch condition, empty if unconditional
    TypePtr type;
    TermPtr term;  // null for type abbreviations
};

struct CheckedDecl {
    std::string name;
    bool is_type = false;
    std::vector<CheckedBranch> branches;
};

/// Elaborates a declaration and registers it in `globals`.
CheckedDecl check_decl(Globals& globals, const surface::Decl& d);

/// Equality of elaborated terms at an elaborated type, via normal forms.
bool equal_tm(const Ctx& ctx, const TypePtr& type, const TermPtr& a, const TermPtr& b);

struct PiComponents {
    std::pair<NfTyPtr, NfTyPtr> dom;
    std::pair<NfTyPtr, NfTyPtr> cod;
};

/// If the two types are equal Pi types, returns their components. Throws
/// NotAPi when a side does not normalize to a Pi type.
std::optional<PiComponents> injective_pi(const Ctx& ctx, const TypePtr& a, const TypePtr& b);

/// Whether CUBICAL_DEBUG_SYSTEMS is set.
bool debug_systems();

} // namespace cubical
