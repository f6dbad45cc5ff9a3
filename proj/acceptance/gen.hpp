#pragma once

// Random well-typed core terms over a small type language: the circle,
// non-dependent function and pair types, paths between equal endpoints, and
// glue types over the circle along the identity equivalence.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cubical/checker.hpp"

namespace gen {

using namespace cubical;

struct GTy;
using GTyPtr = std::shared_ptr<const GTy>;

struct GTy {
    enum class K : unsigned char { S1, Pi, Sigma, Path, Glue };
    K k = K::S1;
    GTyPtr a, b;      // Pi/Sigma components; Path line type in `a`
    TermPtr end;      // Path endpoints, at `depth`
    CofibPtr phi;     // Glue cofibration, at `depth`
    int depth = 0;
};

inline constexpr int kKinds = 5;

/// A generated context: the checking context plus the generator's view of
/// each entry (null type for dimensions).
struct GCtx {
    Ctx ctx;
    std::vector<GTyPtr> types;

    [[nodiscard]] int depth() const { return static_cast<int>(types.size()); }
    [[nodiscard]] GCtx with_dim(const std::string& name) const;
    [[nodiscard]] GCtx with_term(const std::string& name, const GTyPtr& t, const TermPtr& id_equiv) const;
};

TypePtr syntax(const GTy& t, int depth, const TermPtr& id_equiv);

class Gen {
public:
    Gen(unsigned seed, TermPtr id_equiv) : rng_(seed), id_equiv_(std::move(id_equiv)) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    Dim dim(const GCtx& g, int bound = 0);
    CofibPtr cof(const GCtx& g, int depth, int bound = 0);
    GTyPtr type(const GCtx& g, int fuel);
    GTyPtr type_of_kind(const GCtx& g, GTy::K k, int fuel);
    TermPtr term(const GCtx& g, const GTyPtr& t, int fuel);

    /// Context with up to `max_dims` dimensions and `max_terms` term variables.
    GCtx context(const Globals& globals, int max_dims, int max_terms, int fuel);

    [[nodiscard]] TypePtr syntax_of(const GTy& t, int depth) const { return syntax(t, depth, id_equiv_); }
    [[nodiscard]] const TermPtr& id_equiv() const { return id_equiv_; }

private:
    std::mt19937 rng_;
    TermPtr id_equiv_;
    int fresh_ = 0;

    TermPtr intro(const GCtx& g, const GTyPtr& t, int fuel);
};

} // namespace gen
