#pragma once

// Reification and the normalization entry points.

#include "cubical/domain.hpp"
#include "cubical/nf.hpp"

namespace cubical {

NfTyPtr reify_ty(const Cx& cx, const TyValue& a);
NfPtr reify(const Cx& cx, const TyValue& a, const Value& v);
NePtr reify_ne(const Cx& cx, const NeuPtr& n);

/// Normal form of a type or term checked in `cx`.
NfTyPtr nbe_ty(const Cx& cx, const TypePtr& t);
NfPtr nbe_tm(const Cx& cx, const TypePtr& type, const TermPtr& t);

/// Judgmental equality of values, decided by comparing normal forms.
bool conv_ty(const Cx& cx, const TyValue& a, const TyValue& b);
bool conv(const Cx& cx, const TyValue& a, const Value& u, const Value& v);

/// Applies the boundary rewrites of the context (for instance loop(r) with
/// r an endpoint, or a lift whose cofibration now holds) by normalizing the
/// embedding again.
NfTyPtr boundary_normalize(const Cx& cx, const NfTyPtr& t);
NfPtr boundary_normalize(const Cx& cx, const TypePtr& type, const NfPtr& t);

/// Equality of normal forms in `cx`, optionally under a further hypothesis:
/// both sides are compared in every branch obtained by left inversion.
bool nf_equal(const Cx& cx, const NfTyPtr& a, const NfTyPtr& b, const Cof& hyp = cof::top());
bool nf_equal(const Cx& cx, const TypePtr& type, const NfPtr& a, const NfPtr& b, const Cof& hyp = cof::top());

} // namespace cubical
