// Computation rules stated as pairs of declarations that must share a normal
// form, plus injectivity of Pi types.

#include <random>

#include "common.hpp"
#include "cubical/errors.hpp"

namespace acc {

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

// Each pair is `NAMEl` / `NAMEr`.
Pairs pairs_of(std::initializer_list<const char*> names) {
    Pairs out;
    for (const char* n : names) out.emplace_back(std::string(n) + "l", std::string(n) + "r");
    return out;
}

const char* kConnectives = R"(
-- coercion along Pi types
def pc1l (r s : I) (f : S1 -> Path (_. S1) (loop r) (loop r)) : S1 -> Path (_. S1) (loop s) (loop s) =
  coe (i. S1 -> Path (_. S1) (loop i) (loop i)) r s f
def pc1r (r s : I) (f : S1 -> Path (_. S1) (loop r) (loop r)) : S1 -> Path (_. S1) (loop s) (loop s) =
  \x -> coe (i. Path (_. S1) (loop i) (loop i)) r s (f (coe (_. S1) s r x))

def pc2l (r s : I) (f : Glue [r = 0 -> (S1, idEquiv)] S1 -> S1) : Glue [s = 0 -> (S1, idEquiv)] S1 -> S1 =
  coe (i. Glue [i = 0 -> (S1, idEquiv)] S1 -> S1) r s f
def pc2r (r s : I) (f : Glue [r = 0 -> (S1, idEquiv)] S1 -> S1) : Glue [s = 0 -> (S1, idEquiv)] S1 -> S1 =
  \x -> coe (_. S1) r s (f (coe (i. Glue [i = 0 -> (S1, idEquiv)] S1) s r x))

def pc3l (r s : I) (f : (x : S1) -> Path (_. S1) x (loop r)) : (x : S1) -> Path (_. S1) x (loop s) =
  coe (i. (x : S1) -> Path (_. S1) x (loop i)) r s f
def pc3r (r s : I) (f : (x : S1) -> Path (_. S1) x (loop r)) : (x : S1) -> Path (_. S1) x (loop s) =
  \x -> coe (i. Path (_. S1) (coe (_. S1) s i x) (loop i)) r s (f (coe (_. S1) s r x))

-- coercion along Sigma types
def sc1l (r s : I) (p : Glue [r = 0 -> (S1, idEquiv)] S1 * S1) : Glue [s = 0 -> (S1, idEquiv)] S1 * S1 =
  coe (i. Glue [i = 0 -> (S1, idEquiv)] S1 * S1) r s p
def sc1r (r s : I) (p : Glue [r = 0 -> (S1, idEquiv)] S1 * S1) : Glue [s = 0 -> (S1, idEquiv)] S1 * S1 =
  (coe (i. Glue [i = 0 -> (S1, idEquiv)] S1) r s (p .1), coe (_. S1) r s (p .2))

def sc2l (r s : I) (p : (x : S1) * Path (_. S1) x (loop r)) : (x : S1) * Path (_. S1) x (loop s) =
  coe (i. (x : S1) * Path (_. S1) x (loop i)) r s p
def sc2r (r s : I) (p : (x : S1) * Path (_. S1) x (loop r)) : (x : S1) * Path (_. S1) x (loop s) =
  (coe (_. S1) r s (p .1), coe (i. Path (_. S1) (coe (_. S1) r i (p .1)) (loop i)) r s (p .2))

def sc3l (r s : I) (p : Path (_. S1) (loop r) (loop r) * S1) : Path (_. S1) (loop s) (loop s) * S1 =
  coe (i. Path (_. S1) (loop i) (loop i) * S1) r s p
def sc3r (r s : I) (p : Path (_. S1) (loop r) (loop r) * S1) : Path (_. S1) (loop s) (loop s) * S1 =
  (coe (i. Path (_. S1) (loop i) (loop i)) r s (p .1), coe (_. S1) r s (p .2))

-- composition in Sigma types
def sh1l (r s j : I) (u : S1 * S1) : S1 * S1 =
  hcom r s [j = 0] (S1 * S1) (k. (loop k, u .2))
def sh1r (r s j : I) (u : S1 * S1) : S1 * S1 =
  (hcom r s [j = 0] S1 (k. loop k), hcom r s [j = 0] S1 (k. coe (_. S1) k s (u .2)))

def sh2l (r s j : I) : (x : S1) * Path (_. S1) x x =
  hcom r s [j = 0] ((x : S1) * Path (_. S1) x x) (k. (loop k, <_> loop k))
def sh2r (r s j : I) : (x : S1) * Path (_. S1) x x =
  (hcom r s [j = 0] S1 (k. loop k),
   hcom r s [j = 0] (Path (_. S1) (hcom r s [j = 0] S1 (n. loop n)) (hcom r s [j = 0] S1 (n. loop n)))
     (k. coe (m. Path (_. S1) (hcom r m [j = 0] S1 (n. loop n)) (hcom r m [j = 0] S1 (n. loop n))) k s (<_> loop k)))

def sh3l (r s j : I) (u : S1) : S1 * Path (_. S1) base base =
  hcom r s [j = 1] (S1 * Path (_. S1) base base) (k. (u, <m> loop m))
def sh3r (r s j : I) (u : S1) : S1 * Path (_. S1) base base =
  (hcom r s [j = 1] S1 (k. u), hcom r s [j = 1] (Path (_. S1) base base) (k. coe (_. Path (_. S1) base base) k s (<m> loop m)))

-- composition in path types
def ph1l (r s j : I) (p : Path (_. S1) base base) : Path (_. S1) base base =
  hcom r s [j = 0] (Path (_. S1) base base) (k. p)
def ph1r (r s j : I) (p : Path (_. S1) base base) : Path (_. S1) base base =
  <m> hcom r s [j = 0 \/ m = 0 \/ m = 1] S1 (k. [k = r \/ j = 0 -> p @ m | m = 0 -> base | m = 1 -> base])

def ph2l (r s j : I) : Path (_. S1) base base =
  hcom r s [j = 1] (Path (_. S1) base base) (k. <m> hcom 0 k [m = 0 \/ m = 1] S1 (n. [n = 0 \/ m = 0 \/ m = 1 -> loop m]))
def ph2r (r s j : I) : Path (_. S1) base base =
  <m> hcom r s [j = 1 \/ m = 0 \/ m = 1] S1
    (k. [k = r \/ j = 1 -> hcom 0 k [m = 0 \/ m = 1] S1 (n. [n = 0 \/ m = 0 \/ m = 1 -> loop m]) | m = 0 -> base | m = 1 -> base])

def ph3l (r s j : I) (f : S1 -> S1) (p : Path (_. S1 -> S1) f f) : Path (_. S1 -> S1) f f =
  hcom r s [j = 0] (Path (_. S1 -> S1) f f) (k. p)
def ph3r (r s j : I) (f : S1 -> S1) (p : Path (_. S1 -> S1) f f) : Path (_. S1 -> S1) f f =
  <m> hcom r s [j = 0 \/ m = 0 \/ m = 1] (S1 -> S1) (k. [k = r \/ j = 0 -> p @ m | m = 0 -> f | m = 1 -> f])

-- coercion along path types
def pk1l (r s : I) (p : Path (_. S1) (loop r) (loop r)) : Path (_. S1) (loop s) (loop s) =
  coe (i. Path (_. S1) (loop i) (loop i)) r s p
def pk1r (r s : I) (p : Path (_. S1) (loop r) (loop r)) : Path (_. S1) (loop s) (loop s) =
  <m> hcom r s [m = 0 \/ m = 1] S1 (k. coe (_. S1) k s [k = r -> p @ m | m = 0 -> loop k | m = 1 -> loop k])

def pk2l (r s : I) (p : Path (_. S1) base (loop r)) : Path (_. S1) base (loop s) =
  coe (i. Path (_. S1) base (loop i)) r s p
def pk2r (r s : I) (p : Path (_. S1) base (loop r)) : Path (_. S1) base (loop s) =
  <m> hcom r s [m = 0 \/ m = 1] S1 (k. coe (_. S1) k s [k = r -> p @ m | m = 0 -> base | m = 1 -> loop k])

def pk3l (r s : I) (p : Path (_. S1 * S1) (base, loop r) (loop r, base)) : Path (_. S1 * S1) (base, loop s) (loop s, base) =
  coe (i. Path (_. S1 * S1) (base, loop i) (loop i, base)) r s p
def pk3r (r s : I) (p : Path (_. S1 * S1) (base, loop r) (loop r, base)) : Path (_. S1 * S1) (base, loop s) (loop s, base) =
  <m> hcom r s [m = 0 \/ m = 1] (S1 * S1) (k. coe (_. S1 * S1) k s [k = r -> p @ m | m = 0 -> (base, loop k) | m = 1 -> (loop k, base)])

-- circle induction
def ib1l : Path (_. S1) base base = ind-S1 (x. Path (_. S1) x x) (<_> base) (i. <_> loop i) base
def ib1r : Path (_. S1) base base = <_> base
def ib2l (f : S1 -> S1) : S1 -> S1 = ind-S1 (_. S1 -> S1) f (i. f) base
def ib2r (f : S1 -> S1) : S1 -> S1 = f
def ib3l (j : I) : S1 = ind-S1 (_. S1) (loop j) (i. loop j) base
def ib3r (j : I) : S1 = loop j

def il1l (r : I) : Path (_. S1) (loop r) (loop r) = ind-S1 (x. Path (_. S1) x x) (<_> base) (i. <_> loop i) (loop r)
def il1r (r : I) : Path (_. S1) (loop r) (loop r) = <_> loop r
def il2l (r : I) : S1 = ind-S1 (_. S1) base (i. loop i) (loop r)
def il2r (r : I) : S1 = loop r
def il3l (r : I) (x : S1) : S1 * S1 = ind-S1 (_. S1 * S1) (x, base) (i. (x, hcom 0 1 [i = 0 \/ i = 1] S1 (k. [k = 0 \/ i = 0 \/ i = 1 -> base]))) (loop r)
def il3r (r : I) (x : S1) : S1 * S1 = (x, hcom 0 1 [r = 0 \/ r = 1] S1 (k. [k = 0 \/ r = 0 \/ r = 1 -> base]))

-- unglue of glue
def gb1l (i : I) (x : S1) : S1 = unglue (glue [i = 0 -> x] x : Glue [i = 0 -> (S1, idEquiv)] S1)
def gb1r (i : I) (x : S1) : S1 = x
def gb2l (i : I) : S1 = unglue (glue [i = 0 \/ i = 1 -> loop i] (loop i) : Glue [i = 0 \/ i = 1 -> (S1, idEquiv)] S1)
def gb2r (i : I) : S1 = loop i
def gb3l (i j : I) (x : S1) : S1 = unglue (glue [i = j -> x] x : Glue [i = j -> (S1, idEquiv)] S1)
def gb3r (i j : I) (x : S1) : S1 = x

-- glue along a true cofibration
def gt1l (x : S1) : Glue [1 = 1 -> (S1, idEquiv)] S1 = x
def gt1r (x : S1) : S1 = x
def gt2l (i : I) (x : S1) : Glue [i = i -> (S1, idEquiv)] S1 = x
def gt2r (i : I) (x : S1) : S1 = x
def gt3l (i : I) [i = 0] (x : S1) : Glue [i = 0 -> (S1, idEquiv)] S1 = x
def gt3r (i : I) [i = 0] (x : S1) : S1 = x
def gt4l (f : Endo) : Glue [0 = 0 -> (Endo, idEquivEndo)] Endo = f
def gt4r (f : Endo) : Endo = f
)";

const char* kEndpoints = R"(
def ep1l (x : Path (_. S1 -> S1) (\y -> y) (\y -> y)) : S1 = x @ 0 base
def ep1r (x : Path (_. S1 -> S1) (\y -> y) (\y -> y)) : S1 = base
def ep2l (x : Path (_. S1 -> S1) (\y -> y) (\y -> loop 1)) : S1 = x @ 1 base
def ep2r (x : Path (_. S1 -> S1) (\y -> y) (\y -> loop 1)) : S1 = base
def ep3l : S1 = loop 0
def ep3r : S1 = base
def ep4l : S1 = loop 1
def ep4r : S1 = base
def ep5l (j : I) [j = 0 \/ j = 1] (p : Path (_. S1) base (loop 0)) : S1 = p @ j
def ep5r (j : I) [j = 0 \/ j = 1] (p : Path (_. S1) base (loop 0)) : S1 = base
def ep6l (i : I) [i = 0] (x : S1) : Glue [i = 0 -> (S1, idEquiv)] S1 = glue [i = 0 -> x] x
def ep6r (i : I) [i = 0] (x : S1) : Glue [i = 0 -> (S1, idEquiv)] S1 = x
def ep7l (i : I) [i = 1] (g : Glue [i = 1 -> (S1, idEquiv)] S1) : S1 = unglue g
def ep7r (i : I) [i = 1] (g : Glue [i = 1 -> (S1, idEquiv)] S1) : S1 = g
def ep8l (i j : I) [i = j] (p : Path (_. S1) (loop i) (loop j)) (q : Path (_. S1) (loop j) (loop i)) : S1 = p @ 0
def ep8r (i j : I) [i = j] (p : Path (_. S1) (loop i) (loop j)) (q : Path (_. S1) (loop j) (loop i)) : S1 = q @ 1
)";

const char* kEta = R"(
def et1l (f : S1 -> S1) : S1 -> S1 = f
def et1r (f : S1 -> S1) : S1 -> S1 = \x -> f x
def et2l (f : (x : S1) -> Path (_. S1) x x) : (x : S1) -> Path (_. S1) x x = f
def et2r (f : (x : S1) -> Path (_. S1) x x) : (x : S1) -> Path (_. S1) x x = \x -> <i> (f x) @ i
def et3l (p : Path (_. S1 -> S1) (\y -> y) (\y -> y)) : Path (_. S1 -> S1) (\y -> y) (\y -> y) = p
def et3r (p : Path (_. S1 -> S1) (\y -> y) (\y -> y)) : Path (_. S1 -> S1) (\y -> y) (\y -> y) = <i> \y -> p @ i y
def et4l (p : Path (_. S1) base base) : Path (_. S1) base base = p
def et4r (p : Path (_. S1) base base) : Path (_. S1) base base = <i> p @ i
def et5l (p : S1 * S1) : S1 * S1 = p
def et5r (p : S1 * S1) : S1 * S1 = (p .1, p .2)
def et6l (p : (x : S1) * Path (_. S1) x x) : (x : S1) * Path (_. S1) x x = p
def et6r (p : (x : S1) * Path (_. S1) x x) : (x : S1) * Path (_. S1) x x = (p .1, <i> p .2 @ i)
def et7l (f : S1 -> S1 * S1) : S1 -> S1 * S1 = f
def et7r (f : S1 -> S1 * S1) : S1 -> S1 * S1 = \x -> ((f x) .1, (f x) .2)
)";

} // namespace

Result compare_decls(const std::string& src, const Pairs& pairs, const std::string& what) {
    Session s = world();
    try {
        s.load(src);
    } catch (const std::exception& e) {
        return {false, what + ": " + format_error("<suite>", e)};
    }
    for (const auto& name : s.order) {
        if (world().decls.count(name)) continue;
        for (const auto& b : s.get(name).branches) {
            if (b.term) nf_of(b.ctx.cx, b.type, b.term);
            nf_ty_of(b.ctx.cx, b.type);
        }
    }
    int ok = 0;
    std::string failed;
    for (const auto& [l, r] : pairs) {
        bool same = false;
        try {
            same = eq_decls(s, l, r);
        } catch (const std::exception& e) {
            failed += " " + l + "(" + e.what() + ")";
            continue;
        }
        if (same)
            ++ok;
        else
            failed += " " + l;
    }
    std::string detail = what + ": " + std::to_string(ok) + "/" + std::to_string(pairs.size()) + " equal";
    if (!failed.empty()) detail += "; differ:" + failed;
    return {ok == static_cast<int>(pairs.size()), detail};
}

Result connective_rules() {
    return compare_decls(kConnectives,
                         pairs_of({"pc1", "pc2", "pc3", "sc1", "sc2", "sc3", "sh1", "sh2", "sh3", "ph1", "ph2",
                                   "ph3", "pk1", "pk2", "pk3", "ib1", "ib2", "ib3", "il1", "il2", "il3", "gb1",
                                   "gb2", "gb3", "gt1", "gt2", "gt3", "gt4"}),
                         "connective rules");
}

Result endpoint_rules() {
    return compare_decls(kEndpoints, pairs_of({"ep1", "ep2", "ep3", "ep4", "ep5", "ep6", "ep7", "ep8"}),
                         "endpoint rules");
}

Result eta_laws() {
    return compare_decls(kEta, pairs_of({"et1", "et2", "et3", "et4", "et5", "et6", "et7"}), "eta laws");
}

Result pi_injectivity() {
    static const char* pool[] = {
        "S1",
        "S1 -> S1",
        "Endo",
        "S1 * S1",
        "Path (_. S1) base base",
        "Path (_. S1) base (loop 0)",
        "Path (_. S1) (loop 1) base",
        "(x : S1) * Path (_. S1) x x",
        "Glue [1 = 1 -> (S1, idEquiv)] S1",
        "Glue [0 = 0 -> (Endo, idEquivEndo)] (S1 -> S1)",
        "Glue [0 = 1 -> (S1, idEquiv)] S1",
        "Path (_. S1 -> S1) (\\y -> y) (\\y -> y)",
    };
    constexpr int n = sizeof(pool) / sizeof(pool[0]);
    Ctx ctx = empty_ctx(world().globals);
    std::vector<TypePtr> types;
    for (const char* src : pool) types.push_back(check_ty(ctx, surface::parse_expr(src)));
    auto same = [&](int a, int b) { return serialize(nf_ty_of(ctx.cx, types[a])) == serialize(nf_ty_of(ctx.cx, types[b])); };

    std::mt19937 rng(9);
    std::uniform_int_distribution<int> any(0, n - 1);
    int agree = 0, equal_pairs = 0, unwrapped = 0;
    constexpr int total = 50;
    for (int k = 0; k < total; ++k) {
        int a = any(rng), b = any(rng), a2 = any(rng), b2 = any(rng);
        // bias towards near misses so both outcomes occur
        if (k % 3 == 0) a2 = a;
        if (k % 5 == 0) b2 = b;
        TypePtr p1 = ty::pi(types[a], shift(types[b], 1), "_");
        TypePtr p2 = ty::pi(types[a2], shift(types[b2], 1), "_");
        bool expected = same(a, a2) && same(b, b2);
        std::optional<PiComponents> got = injective_pi(ctx, p1, p2);
        bool components_ok = !got || (serialize(got->dom.first) == serialize(nf_ty_of(ctx.cx, types[a])) &&
                                      serialize(got->dom.second) == serialize(nf_ty_of(ctx.cx, types[a2])));
        if (got.has_value() == expected && components_ok) ++agree;
        if (expected) ++equal_pairs;
    }
    // A glue type along a true cofibration is its fiber, so it unwraps.
    for (auto [g, p] : {std::pair{"Glue [1 = 1 -> (Endo, idEquivEndo)] (S1 -> S1)", "Endo"},
                        std::pair{"Glue [0 = 0 -> (Endo, idEquivEndo)] Endo", "S1 -> S1"},
                        std::pair{"Glue [1 = 1 -> (S1 -> S1, idEquivEndo)] Endo", "(x : S1) -> S1"}}) {
        try {
            auto pc = injective_pi(ctx, check_ty(ctx, surface::parse_expr(g)), check_ty(ctx, surface::parse_expr(p)));
            if (pc && serialize(pc->dom.first) == "s1" && serialize(pc->cod.first) == "s1") ++unwrapped;
        } catch (const NotAPi&) {
        }
    }
    bool pass = agree == total && unwrapped == 3 && equal_pairs > 0 && equal_pairs < total;
    return {pass, std::to_string(agree) + "/" + std::to_string(total) + " pairs consistent (" +
                      std::to_string(equal_pairs) + " equal), " + std::to_string(unwrapped) +
                      "/3 total glue types unwrapped"};
}

} // namespace acc
