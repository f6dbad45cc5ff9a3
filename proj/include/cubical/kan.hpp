#pragma once

// Kan operations on the semantic domain.

#include "cubical/domain.hpp"

namespace cubical {

/// Homogeneous composition in `a` from r to s. `tube` is defined under
/// (i = r) \/ phi for its dimension argument i.
Value do_hcom(const Cx& cx, const TyValue& a, Dim r, Dim s, const Cof& phi, const DimClosure& tube);

/// Coercion of `v : line(r)` to `line(s)`.
Value do_coe(const Cx& cx, const TyDimClosure& line, Dim r, Dim s, const Value& v);

/// Heterogeneous composition: hcom in line(s) of the tube coerced to s.
Value do_com(const Cx& cx, const TyDimClosure& line, Dim r, Dim s, const Cof& phi, const DimClosure& tube);

} // namespace cubical
