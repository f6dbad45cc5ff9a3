#include "cubical/cof.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cubical {

int Congruence::find(int atom) const {
    if (atom >= static_cast<int>(parent_.size())) return atom;
    while (parent_[atom] != atom) {
        parent_[atom] = parent_[parent_[atom]];
        atom = parent_[atom];
    }
    return atom;
}

Dim Congruence::rep(Dim d) const { return Dim::from_atom(find(d.atom())); }

void Congruence::merge(Dim a, Dim b) {
    int x = find(a.atom());
    int y = find(b.atom());
    if (x == y) return;
    int need = std::max(x, y) + 1;
    if (static_cast<int>(parent_.size()) < need) {
        int old = static_cast<int>(parent_.size());
        parent_.resize(need);
        for (int k = old; k < need; ++k) parent_[k] = k;
    }
    if (x < y) {
        parent_[y] = x;
    } else {
        parent_[x] = y;
    }
    if (find(0) == find(1)) inconsistent_ = true;
}

namespace {

std::optional<Conj> solve(const Congruence& cong, const Conj& raw) {
    Congruence merged = cong;
    for (const auto& [a, b] : raw.eqs) merged.merge(a, b);
    if (!merged.consistent()) return std::nullopt;
    std::set<Dim> roots;
    for (const auto& [a, b] : raw.eqs) {
        roots.insert(cong.rep(a));
        roots.insert(cong.rep(b));
    }
    Conj out;
    for (Dim a : roots) {
        Dim r = merged.rep(a);
        if (r != a) out.eqs.emplace_back(a, r);
    }
    std::sort(out.eqs.begin(), out.eqs.end());
    return out;
}

Cof normalize(const Congruence& cong, const std::vector<Conj>& raw) {
    std::vector<Conj> solved;
    for (const auto& c : raw) {
        auto s = solve(cong, c);
        if (!s) continue;
        if (s->eqs.empty()) return cof::top();
        solved.push_back(std::move(*s));
    }
    std::sort(solved.begin(), solved.end());
    solved.erase(std::unique(solved.begin(), solved.end()), solved.end());
    Cof out;
    for (std::size_t i = 0; i < solved.size(); ++i) {
        auto ctx = assume(cong, solved[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < solved.size() && !redundant; ++j)
            if (j != i && holds(*ctx, solved[j])) redundant = true;
        if (!redundant) out.branches.push_back(solved[i]);
    }
    return out;
}

const Congruence& empty_congruence() {
    static const Congruence empty;
    return empty;
}

} // namespace

namespace cof {

Cof bot() { return {}; }
Cof top() { return Cof{{Conj{}}}; }
Cof eq(Dim r, Dim s) { return normalize(empty_congruence(), {Conj{{{r, s}}}}); }

Cof join(const Cof& a, const Cof& b) {
    std::vector<Conj> all = a.branches;
    all.insert(all.end(), b.branches.begin(), b.branches.end());
    return normalize(empty_congruence(), all);
}

Cof meet(const Cof& a, const Cof& b) {
    std::vector<Conj> all;
    for (const auto& x : a.branches)
        for (const auto& y : b.branches) {
            Conj c = x;
            c.eqs.insert(c.eqs.end(), y.eqs.begin(), y.eqs.end());
            all.push_back(std::move(c));
        }
    return normalize(empty_congruence(), all);
}

Cof boundary(Dim r) { return join(eq(r, Dim::zero()), eq(r, Dim::one())); }

Cof of_conj(const Conj& c) { return normalize(empty_congruence(), {c}); }

} // namespace cof

Cof to_dnf(const CofibPtr& c, const std::function<Dim(int)>& env, int fresh) {
    auto look = [&](Dim d) { return d.is_var() ? env(d.var) : d; };
    return std::visit(
        [&](const auto& n) -> Cof {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, Cofib::Eq>) {
                return cof::eq(look(n.lhs), look(n.rhs));
            } else if constexpr (std::is_same_v<N, Cofib::And>) {
                return cof::meet(to_dnf(n.lhs, env, fresh), to_dnf(n.rhs, env, fresh));
            } else if constexpr (std::is_same_v<N, Cofib::Or>) {
                return cof::join(to_dnf(n.lhs, env, fresh), to_dnf(n.rhs, env, fresh));
            } else {
                // The bound variable is instantiated by a rigid fresh level;
                // a branch survives only if it does not constrain that level.
                auto inner = [&](int k) { return k == 0 ? Dim::var_of(fresh) : env(k - 1); };
                Cof body = to_dnf(n.body, inner, fresh + 1);
                Cof out;
                for (auto& b : body.branches)
                    if (!mentions(b, fresh)) out.branches.push_back(b);
                return normalize(empty_congruence(), out.branches);
            }
        },
        c->node);
}

bool holds(const Congruence& cong, const Conj& conj) {
    return std::all_of(conj.eqs.begin(), conj.eqs.end(), [&](const auto& e) { return cong.equal(e.first, e.second); });
}

bool holds(const Congruence& cong, const Cof& cof) {
    if (!cong.consistent()) return true;
    return std::any_of(cof.branches.begin(), cof.branches.end(), [&](const Conj& c) { return holds(cong, c); });
}

bool entails(const Congruence& cong, const Cof& hyp, const Cof& goal) {
    for (const auto& c : hyp.branches) {
        auto ext = assume(cong, c);
        if (ext && !holds(*ext, goal)) return false;
    }
    return true;
}

bool equivalent(const Congruence& cong, const Cof& a, const Cof& b) {
    return entails(cong, a, b) && entails(cong, b, a);
}

std::optional<Congruence> assume(const Congruence& cong, const Conj& conj) {
    Congruence out = cong;
    for (const auto& [a, b] : conj.eqs) out.merge(a, b);
    if (!out.consistent()) return std::nullopt;
    return out;
}

std::vector<std::pair<Conj, Congruence>> split(const Congruence& cong, const Cof& cof) {
    std::vector<std::pair<Conj, Congruence>> out;
    for (const auto& c : cof.branches)
        if (auto ext = assume(cong, c)) out.emplace_back(c, std::move(*ext));
    return out;
}

Cof relative(const Congruence& cong, const Cof& cof) { return normalize(cong, cof.branches); }

bool mentions(const Conj& c, int level) {
    Dim v = Dim::var_of(level);
    return std::any_of(c.eqs.begin(), c.eqs.end(), [&](const auto& e) { return e.first == v || e.second == v; });
}

bool mentions(const Cof& c, int level) {
    return std::any_of(c.branches.begin(), c.branches.end(), [&](const Conj& b) { return mentions(b, level); });
}

CofibPtr to_cofib(const Cof& c, const std::function<Dim(Dim)>& map_dim) {
    if (c.is_bot()) return cof_bot();
    if (c.is_top()) return cof_top();
    auto conj = [&](const Conj& b) {
        CofibPtr acc;
        for (auto it = b.eqs.rbegin(); it != b.eqs.rend(); ++it) {
            CofibPtr e = cof_eq(map_dim(it->first), map_dim(it->second));
            acc = acc ? cof_and(e, acc) : e;
        }
        return acc;
    };
    CofibPtr acc;
    for (auto it = c.branches.rbegin(); it != c.branches.rend(); ++it) {
        CofibPtr b = conj(*it);
        acc = acc ? cof_or(b, acc) : b;
    }
    return acc;
}

std::string to_string(const Cof& c) {
    if (c.is_bot()) return "bot";
    if (c.is_top()) return "top";
    auto conj = [](const Conj& b) {
        std::ostringstream os;
        if (b.eqs.size() > 1) os << "(and";
        for (const auto& [l, r] : b.eqs) os << (b.eqs.size() > 1 ? " " : "") << "(= " << to_string(l) << ' ' << to_string(r) << ')';
        if (b.eqs.size() > 1) os << ')';
        return os.str();
    };
    if (c.branches.size() == 1) return conj(c.branches[0]);
    std::string out = "(or";
    for (const auto& b : c.branches) out += " " + conj(b);
    return out + ")";
}

} // namespace cubical
