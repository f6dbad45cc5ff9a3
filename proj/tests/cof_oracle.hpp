#pragma once

// Brute-force truth evaluation for cofibrations, independent of the solver.
//
// Interval values are small integers: 0 and 1 are the endpoints, anything
// larger is an opaque symbol. A context of n dimension variables is
// interpreted by every map into {0, 1, s_1, ..., s_n}; this covers every
// pattern of identifications. A quantifier ranges over 0, 1, every value
// currently in play, and one symbol distinct from all of them.

#include <functional>
#include <vector>

#include "cubical/syntax.hpp"

namespace oracle {

using cubical::CofibPtr;
using cubical::Cofib;
using cubical::Dim;

/// `env` is indexed by de Bruijn index (env[0] is the innermost variable).
inline bool truth(const CofibPtr& c, std::vector<int>& env) {
    auto value = [&](Dim d) {
        if (d.kind == Dim::Kind::Zero) return 0;
        if (d.kind == Dim::Kind::One) return 1;
        return env[d.var];
    };
    if (auto* e = std::get_if<Cofib::Eq>(&c->node)) return value(e->lhs) == value(e->rhs);
    if (auto* a = std::get_if<Cofib::And>(&c->node)) return truth(a->lhs, env) && truth(a->rhs, env);
    if (auto* o = std::get_if<Cofib::Or>(&c->node)) return truth(o->lhs, env) || truth(o->rhs, env);
    const auto& f = std::get<Cofib::Forall>(c->node);
    std::vector<int> candidates{0, 1};
    int next = 2;
    for (int v : env) {
        if (v >= 2) candidates.push_back(v);
        if (v >= next) next = v + 1;
    }
    candidates.push_back(next);
    for (int v : candidates) {
        env.insert(env.begin(), v);
        bool ok = truth(f.body, env);
        env.erase(env.begin());
        if (!ok) return false;
    }
    return true;
}

/// Calls `f` on every assignment of `n` context variables.
inline void for_each_assignment(int n, const std::function<void(std::vector<int>&)>& f) {
    std::vector<int> env(n, 0);
    std::function<void(int)> go = [&](int k) {
        if (k == n) {
            std::vector<int> copy = env;
            f(copy);
            return;
        }
        for (int v = 0; v < 2 + n; ++v) {
            env[k] = v;
            go(k + 1);
        }
    };
    go(0);
}

/// True iff every assignment satisfying `hyp` satisfies `goal`.
inline bool entails(int n, const CofibPtr& hyp, const CofibPtr& goal) {
    bool ok = true;
    for_each_assignment(n, [&](std::vector<int>& env) {
        if (ok && truth(hyp, env) && !truth(goal, env)) ok = false;
    });
    return ok;
}

} // namespace oracle
