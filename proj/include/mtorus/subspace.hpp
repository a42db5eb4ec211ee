#pragma once

#include <utility>
#include <vector>

#include "mtorus/linalg.hpp"

namespace mtorus {

// Subspaces of K^n are carried around as matrices whose columns span them.

template <class K>
Mat<K> column_space(const Mat<K>& a) {
    Mat<K> r = a;
    std::vector<Index> pivots = rref_in_place(r);
    Mat<K> basis(a.rows(), static_cast<Index>(pivots.size()));
    for (size_t i = 0; i < pivots.size(); ++i) basis.col(static_cast<Index>(i)) = a.col(pivots[i]);
    return basis;
}

template <class K>
Mat<K> space_sum(const Mat<K>& a, const Mat<K>& b) {
    Mat<K> joined(a.rows(), a.cols() + b.cols());
    joined.leftCols(a.cols()) = a;
    joined.rightCols(b.cols()) = b;
    return column_space(joined);
}

/// Intersection of col(a) and col(b).
template <class K>
Mat<K> space_intersection(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows()) throw input_error("space_intersection: ambient mismatch");
    Mat<K> joined(a.rows(), a.cols() + b.cols());
    joined.leftCols(a.cols()) = a;
    for (Index j = 0; j < b.cols(); ++j)
        for (Index i = 0; i < b.rows(); ++i) joined(i, a.cols() + j) = -b(i, j);
    Mat<K> ker = kernel_basis(joined);
    Mat<K> reps = a * ker.topRows(a.cols());
    return column_space(reps);
}

/// Preimage m^{-1}(col(s)) = { x : m x in col(s) }.
template <class K>
Mat<K> preimage(const Mat<K>& m, const Mat<K>& s) {
    if (m.rows() != s.rows()) throw input_error("preimage: ambient mismatch");
    Mat<K> joined(m.rows(), m.cols() + s.cols());
    joined.leftCols(m.cols()) = m;
    for (Index j = 0; j < s.cols(); ++j)
        for (Index i = 0; i < s.rows(); ++i) joined(i, m.cols() + j) = -s(i, j);
    Mat<K> ker = kernel_basis(joined);
    return column_space(Mat<K>(ker.topRows(m.cols())));
}

template <class K>
Mat<K> image_of_space(const Mat<K>& m, const Mat<K>& s) {
    return column_space(Mat<K>(m * s));
}

template <class K>
Index space_dim(const Mat<K>& s) {
    return rank<K>(s);
}

/// Coordinates of the columns of v in the (independent-column) basis b.
/// Throws when some column lies outside the span.
template <class K>
Mat<K> express_in_basis(const Mat<K>& b, const Mat<K>& v) {
    auto x = solve<K>(b, v);
    if (!x) throw integrity_error("express_in_basis: vector outside the span");
    return *x;
}

}  // namespace mtorus
