#pragma once

#include "mtorus/lmodule.hpp"
#include "mtorus/number_field.hpp"
#include "mtorus/torus_complex.hpp"

namespace mtorus {

// Base change Q -> Q(alpha): rational structures embed coefficientwise.

inline FieldElem lift(const Rational& r) { return FieldElem(r); }

inline Poly<FieldElem> lift(const Poly<Rational>& p) {
    std::vector<FieldElem> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return Poly<FieldElem>::from_coeffs(std::move(c));
}

inline Mat<FieldElem> lift(const Mat<Rational>& m) {
    Mat<FieldElem> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = FieldElem(m(i, j));
    return out;
}

inline PolyMat<FieldElem> lift(const PolyMat<Rational>& m) {
    PolyMat<FieldElem> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out(i, j) = lift(m(i, j));
    return out;
}

/// Presentation is lifted verbatim; invariant factors may split further over
/// the extension, so the result is re-normalized.
inline FPModule<FieldElem> lift_module(const FPModule<Rational>& m) {
    return normalize(fp_module(lift(m.presentation)));
}

inline TorusComplex<FieldElem> lift_complex(const TorusComplex<Rational>& t) {
    TorusComplex<FieldElem> out;
    out.ranks = t.ranks;
    out.differentials.resize(t.differentials.size());
    for (size_t i = 1; i < t.differentials.size(); ++i) out.differentials[i] = lift(t.differentials[i]);
    return out;
}

}  // namespace mtorus
