#pragma once

// Surface language: a named AST, its parser, and a printer from core syntax
// back to concrete syntax.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubical/errors.hpp"
#include "cubical/syntax.hpp"

namespace cubical::surface {

struct SDim {
    enum class Kind : unsigned char { Zero, One, Name };
    Kind kind = Kind::Zero;
    std::string name;
    Span span;
};

struct SCof;
using SCofPtr = std::shared_ptr<const SCof>;

struct SCof {
    struct Eq { SDim lhs, rhs; };
    struct And { SCofPtr lhs, rhs; };
    struct Or { SCofPtr lhs, rhs; };
    struct Forall { std::string name; SCofPtr body; };

    std::variant<Eq, And, Or, Forall> node;
    Span span;
};

struct SExpr;
using SPtr = std::shared_ptr<const SExpr>;

struct SBranch {
    SCofPtr cond;
    SPtr body;
};

struct SExpr {
    struct Var { std::string name; };
    struct Lam { std::string name; SPtr body; };
    struct App { SPtr fn, arg; };
    struct Pair { SPtr fst, snd; };
    struct Fst { SPtr pair; };
    struct Snd { SPtr pair; };
    struct PLam { std::string name; SPtr body; };
    struct PApp { SPtr path; SDim r; };
    struct Ann { SPtr term, type; };
    struct Base {};
    struct Loop { SDim r; };
    struct S1 {};
    struct Path { std::string name; SPtr line, a0, a1; };
    struct Pi { std::string name; SPtr dom, cod; };
    struct Sigma { std::string name; SPtr dom, cod; };
    /// Each branch body is a pair `(A, f)`.
    struct GlueTy { std::vector<SBranch> branches; SPtr base; };
    struct Glue { std::vector<SBranch> branches; SPtr total; };
    struct Unglue { SPtr glue; };
    struct HCom { SDim r, s; SCofPtr phi; SPtr type; std::string name; SPtr tube; };
    struct Coe { std::string name; SPtr line; SDim r, s; SPtr arg; };
    struct Ind { std::string motive_name; SPtr motive, base_case; std::string loop_name; SPtr loop_case, scrut; };
    struct System { std::vector<SBranch> branches; };

    std::variant<Var, Lam, App, Pair, Fst, Snd, PLam, PApp, Ann, Base, Loop, S1, Path, Pi, Sigma, GlueTy, Glue,
                 Unglue, HCom, Coe, Ind, System>
        node;
    Span span;
};

struct Param {
    enum class Kind : unsigned char { Term, Dim, Hyp };
    Kind kind = Kind::Term;
    std::string name;
    SPtr type;    // Term
    SCofPtr cof;  // Hyp
    Span span;
};

/// `def NAME PARAMS [: TYPE] = BODY`, or `type NAME = TYPE` for a closed
/// type abbreviation (then `type` is unset and `body` holds the type).
struct Decl {
    enum class Kind : unsigned char { Def, Type };
    Kind kind = Kind::Def;
    std::string name;
    std::vector<Param> params;
    SPtr type;
    SPtr body;
    Span span;
};

std::vector<Decl> parse_file(std::string_view src);
SPtr parse_expr(std::string_view src);
SCofPtr parse_cof(std::string_view src);

/// True for words that cannot be used as variable names.
bool is_keyword(std::string_view word);

/// Free dimension names of a cofibration, in order of first occurrence.
std::vector<std::string> free_dims(const SCofPtr& c);

// ---------------------------------------------------------------------------
// Printing core syntax. `scope` lists the names of the enclosing telescope,
// outermost first. Bound names are freshened so that the output parses back
// to the same term.

std::string print(const TermPtr& t, const std::vector<std::string>& scope);
std::string print(const TypePtr& t, const std::vector<std::string>& scope);
std::string print(const CofibPtr& c, const std::vector<std::string>& scope);

} // namespace cubical::surface
