#pragma once

// Cofibration solver.
//
// Cofibrations are kept in a canonical disjunctive normal form over
// equations between dimensions. Dimension variables here are de Bruijn
// levels. A context of dimension equations is a congruence (union-find) in
// which every class is represented by its least atom, so constants win over
// variables and older variables win over newer ones.

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubical/dim.hpp"
#include "cubical/syntax.hpp"

namespace cubical {

class Congruence {
public:
    [[nodiscard]] Dim rep(Dim d) const;
    [[nodiscard]] bool equal(Dim a, Dim b) const { return rep(a) == rep(b); }
    /// Identifies `a` and `b`. Afterwards check `consistent()`.
    void merge(Dim a, Dim b);
    [[nodiscard]] bool consistent() const { return !inconsistent_; }

private:
    int find(int atom) const;

    mutable std::vector<int> parent_;
    bool inconsistent_ = false;
};

/// A conjunction of equations `lhs = rhs` with `lhs > rhs`, sorted.
struct Conj {
    std::vector<std::pair<Dim, Dim>> eqs;

    friend bool operator==(const Conj&, const Conj&) = default;
    friend auto operator<=>(const Conj& a, const Conj& b) {
        return std::lexicographical_compare_three_way(a.eqs.begin(), a.eqs.end(), b.eqs.begin(), b.eqs.end(),
                                                      [](const auto& x, const auto& y) {
                                                          if (auto c = x.first <=> y.first; c != 0) return c;
                                                          return x.second <=> y.second;
                                                      });
    }
};

/// A disjunction of conjunctions. No branches is false; one empty branch is
/// true. Values built through the functions below are canonical: each branch
/// is in solved form, no branch entails another, and branches are sorted.
struct Cof {
    std::vector<Conj> branches;

    [[nodiscard]] bool is_bot() const { return branches.empty(); }
    [[nodiscard]] bool is_top() const { return branches.size() == 1 && branches[0].eqs.empty(); }

    friend bool operator==(const Cof&, const Cof&) = default;
};

namespace cof {
Cof bot();
Cof top();
Cof eq(Dim r, Dim s);
Cof join(const Cof& a, const Cof& b);
Cof meet(const Cof& a, const Cof& b);
/// (r = 0) \/ (r = 1)
Cof boundary(Dim r);
Cof of_conj(const Conj& c);
} // namespace cof

/// Converts a syntactic cofibration. `env` maps free indices to dimensions;
/// `fresh` is a level above every level `env` can produce.
Cof to_dnf(const CofibPtr& c, const std::function<Dim(int)>& env, int fresh);

/// True iff `cof` holds in `cong`.
bool holds(const Congruence& cong, const Cof& cof);
bool holds(const Congruence& cong, const Conj& conj);
/// True iff every consistent extension of `cong` by a branch of `hyp` satisfies `goal`.
bool entails(const Congruence& cong, const Cof& hyp, const Cof& goal);
/// Equivalence under `cong`.
bool equivalent(const Congruence& cong, const Cof& a, const Cof& b);

std::optional<Congruence> assume(const Congruence& cong, const Conj& conj);
/// The consistent extensions of `cong`, one per branch of `cof`.
std::vector<std::pair<Conj, Congruence>> split(const Congruence& cong, const Cof& cof);

/// Canonical form of `cof` relative to the equations of `cong`: equations
/// already implied are removed and branches are phrased over class
/// representatives. Equivalent inputs yield identical outputs.
Cof relative(const Congruence& cong, const Cof& cof);

/// Whether a cofibration or conjunction mentions the variable at `level`.
bool mentions(const Conj& c, int level);
bool mentions(const Cof& c, int level);

/// Syntax for a canonical cofibration; `map_dim` translates each dimension.
CofibPtr to_cofib(const Cof& c, const std::function<Dim(Dim)>& map_dim);

/// Debug rendering over levels.
std::string to_string(const Cof& c);

} // namespace cubical
