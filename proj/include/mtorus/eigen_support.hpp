#pragma once

#include <Eigen/Core>

#include "mtorus/number_field.hpp"
#include "mtorus/poly.hpp"
#include "mtorus/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mtorus::Rational> : GenericNumTraits<mtorus::Rational> {
    typedef mtorus::Rational Real;
    typedef mtorus::Rational NonInteger;
    typedef mtorus::Rational Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 60
    };
};

template <>
struct NumTraits<mtorus::FieldElem> : GenericNumTraits<mtorus::FieldElem> {
    typedef mtorus::FieldElem Real;
    typedef mtorus::FieldElem NonInteger;
    typedef mtorus::FieldElem Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 12,
        AddCost = 150,
        MulCost = 300
    };
};

template <class K>
struct NumTraits<mtorus::Poly<K>> : GenericNumTraits<mtorus::Poly<K>> {
    typedef mtorus::Poly<K> Real;
    typedef mtorus::Poly<K> NonInteger;
    typedef mtorus::Poly<K> Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 300,
        MulCost = 600
    };
};

}  // namespace Eigen

namespace mtorus {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K>
using UPoly = Poly<K>;  // polynomials in the deck variable u
template <class K>
using PolyMat = Mat<Poly<K>>;

template <class K>
Mat<K> identity(Eigen::Index n) {
    Mat<K> m = Mat<K>::Constant(n, n, K(0));
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
}

template <class K>
bool matrices_equal(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

template <class K>
bool is_zero_matrix(const Mat<K>& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == K(0))) return false;
    return true;
}

}  // namespace mtorus
