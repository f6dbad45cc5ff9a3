#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cubical {

/// An element of the interval: one of the endpoints or a variable.
///
/// The meaning of `var` depends on where the dimension lives. In core syntax
/// and normal forms it is a de Bruijn index into the enclosing telescope; in
/// the semantic domain it is a de Bruijn level.
struct Dim {
    enum class Kind : std::uint8_t { Zero, One, Var };

    Kind kind = Kind::Zero;
    int var = 0;

    static constexpr Dim zero() { return {Kind::Zero, 0}; }
    static constexpr Dim one() { return {Kind::One, 0}; }
    static constexpr Dim var_of(int v) { return {Kind::Var, v}; }

    [[nodiscard]] constexpr bool is_const() const { return kind != Kind::Var; }
    [[nodiscard]] constexpr bool is_var() const { return kind == Kind::Var; }

    /// Dense numbering used by congruence stores: 0, 1, then variables.
    [[nodiscard]] constexpr int atom() const {
        switch (kind) {
        case Kind::Zero: return 0;
        case Kind::One: return 1;
        default: return 2 + var;
        }
    }
    static constexpr Dim from_atom(int a) {
        if (a == 0) return zero();
        if (a == 1) return one();
        return var_of(a - 2);
    }

    friend constexpr bool operator==(const Dim&, const Dim&) = default;
    friend constexpr auto operator<=>(const Dim& a, const Dim& b) { return a.atom() <=> b.atom(); }
};

/// Renders a dimension in the serialized normal-form style (`0`, `1`, `#k`).
std::string to_string(Dim d);

} // namespace cubical
