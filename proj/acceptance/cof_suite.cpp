// Entailment against brute-force evaluation: every cofibration up to depth 3
// over two variables, and random deeper ones over three.

#include <random>

#include "../tests/cof_oracle.hpp"
#include "common.hpp"
#include "cubical/cof.hpp"

namespace acc {

namespace {

Cof dnf(int n, const CofibPtr& c) {
    return to_dnf(c, [n](int k) { return Dim::var_of(n - 1 - k); }, n);
}

bool solver(int n, const CofibPtr& hyp, const CofibPtr& goal) {
    return entails(Congruence{}, dnf(n, hyp), dnf(n, goal));
}

std::vector<Dim> dims_of(int n) {
    std::vector<Dim> out{Dim::zero(), Dim::one()};
    for (int k = 0; k < n; ++k) out.push_back(Dim::var_of(k));
    return out;
}

/// Equations up to symmetry, plus one trivially true equation.
std::vector<CofibPtr> atoms(int n) {
    auto ds = dims_of(n);
    std::vector<CofibPtr> out{cof_eq(Dim::zero(), Dim::zero())};
    for (size_t a = 0; a < ds.size(); ++a)
        for (size_t b = a + 1; b < ds.size(); ++b) out.push_back(cof_eq(ds[a], ds[b]));
    return out;
}

/// Every cofibration of depth at most `depth` over `n` variables, up to
/// commutativity of the connectives.
std::vector<CofibPtr> all_cofs(int n, int depth) {
    if (depth <= 1) return atoms(n);
    std::vector<CofibPtr> smaller = all_cofs(n, depth - 1);
    std::vector<CofibPtr> out = smaller;
    for (size_t a = 0; a < smaller.size(); ++a)
        for (size_t b = a; b < smaller.size(); ++b) {
            out.push_back(cof_and(smaller[a], smaller[b]));
            out.push_back(cof_or(smaller[a], smaller[b]));
        }
    for (const auto& body : all_cofs(n + 1, depth - 1)) out.push_back(cof_forall(body, "k"));
    return out;
}

CofibPtr random_cof(std::mt19937& rng, int n, int depth) {
    auto ds = dims_of(n);
    std::uniform_int_distribution<int> any(0, static_cast<int>(ds.size()) - 1);
    if (depth <= 1 || rng() % 3 == 0) return cof_eq(ds[any(rng)], ds[any(rng)]);
    if (rng() % 2) return cof_and(random_cof(rng, n, depth - 1), random_cof(rng, n, depth - 1));
    return cof_or(random_cof(rng, n, depth - 1), random_cof(rng, n, depth - 1));
}

/// Depth at most 4 over `n` variables, with exactly one quantifier.
CofibPtr random_with_forall(std::mt19937& rng, int n) {
    CofibPtr q = cof_forall(random_cof(rng, n + 1, 2), "k");
    switch (rng() % 3) {
    case 0: return q;
    case 1: return cof_or(q, random_cof(rng, n, 3));
    default: return cof_and(random_cof(rng, n, 3), q);
    }
}

} // namespace

Result cof_oracle() {
    const int n = 2;
    std::vector<CofibPtr> goals = atoms(n);
    goals.push_back(cof_bot());
    std::vector<CofibPtr> formulas = all_cofs(n, 3);
    long cases = 0, agree = 0;
    for (const auto& phi : formulas) {
        auto test = [&](const CofibPtr& h, const CofibPtr& g) {
            ++cases;
            if (solver(n, h, g) == oracle::entails(n, h, g)) ++agree;
        };
        test(cof_top(), phi);
        for (const auto& g : goals) {
            test(phi, g);
            test(g, phi);
        }
    }

    std::mt19937 rng(7);
    int random_agree = 0, entailed = 0;
    for (int k = 0; k < 100; ++k) {
        CofibPtr h = random_cof(rng, 3, 4), g = random_with_forall(rng, 3);
        if (k % 2) std::swap(h, g);
        bool want = oracle::entails(3, h, g);
        if (solver(3, h, g) == want) ++random_agree;
        entailed += want;
    }
    bool pass = agree == cases && random_agree == 100;
    return {pass, std::to_string(formulas.size()) + " cofibrations, " + std::to_string(agree) + "/" +
                      std::to_string(cases) + " entailments agree; random with a quantifier " +
                      std::to_string(random_agree) + "/100 (" + std::to_string(entailed) + " entailed)"};
}

} // namespace acc
