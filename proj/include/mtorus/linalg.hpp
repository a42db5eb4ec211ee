#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mtorus/eigen_support.hpp"
#include "mtorus/errors.hpp"

namespace mtorus {

using Eigen::Index;

/// In-place reduced row echelon form with deterministic pivoting (first
/// non-zero entry in the column). Returns the pivot columns.
template <class K>
std::vector<Index> rref_in_place(Mat<K>& a) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index p = -1;
        for (Index i = row; i < a.rows(); ++i)
            if (!(a(i, col) == K(0))) { p = i; break; }
        if (p < 0) continue;
        if (p != row) a.row(p).swap(a.row(row));
        K inv = K(1) / a(row, col);
        for (Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
        for (Index i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == K(0)) continue;
            K f = a(i, col);
            for (Index j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
Index rank(Mat<K> a) {
    return static_cast<Index>(rref_in_place(a).size());
}

struct RankKernel {
    Index rank = 0;
};

/// Kernel basis as matrix columns. rank(A) + cols(kernel) == cols(A).
template <class K>
Mat<K> kernel_basis(Mat<K> a) {
    const Index n = a.cols();
    std::vector<Index> pivots = rref_in_place(a);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (Index c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    Mat<K> ker = Mat<K>::Constant(n, n - static_cast<Index>(pivots.size()), K(0));
    Index k = 0;
    for (Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        ker(free, k) = K(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            // row r of the rref corresponds to pivot column pivots[r]
            ker(pivots[r], k) = -a(static_cast<Index>(r), free);
        }
        ++k;
    }
    return ker;
}

template <class K>
std::pair<Index, Mat<K>> rank_kernel(const Mat<K>& a) {
    Mat<K> ker = kernel_basis(a);
    return {a.cols() - ker.cols(), std::move(ker)};
}

/// One solution of A x = b, or nullopt when inconsistent.
template <class K>
std::optional<Mat<K>> solve(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows()) throw input_error("solve: shape mismatch");
    Mat<K> aug(a.rows(), a.cols() + b.cols());
    aug.leftCols(a.cols()) = a;
    aug.rightCols(b.cols()) = b;
    std::vector<Index> pivots = rref_in_place(aug);
    for (Index c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat<K> x = Mat<K>::Constant(a.cols(), b.cols(), K(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        for (Index j = 0; j < b.cols(); ++j)
            x(pivots[r], j) = aug(static_cast<Index>(r), a.cols() + j);
    return x;
}

template <class K>
Mat<K> inverse(const Mat<K>& a) {
    if (a.rows() != a.cols()) throw input_error("inverse: matrix not square");
    auto x = solve(a, identity<K>(a.rows()));
    if (!x || rank(a) != a.rows()) throw input_error("inverse: matrix is singular");
    return *x;
}

/// Determinant by Gaussian elimination (field scalars).
template <class K>
K det(Mat<K> a) {
    if (a.rows() != a.cols()) throw input_error("det: matrix not square");
    K d(1);
    const Index n = a.rows();
    for (Index col = 0; col < n; ++col) {
        Index p = -1;
        for (Index i = col; i < n; ++i)
            if (!(a(i, col) == K(0))) { p = i; break; }
        if (p < 0) return K(0);
        if (p != col) {
            a.row(p).swap(a.row(col));
            d = -d;
        }
        d = d * a(col, col);
        K inv = K(1) / a(col, col);
        for (Index i = col + 1; i < n; ++i) {
            if (a(i, col) == K(0)) continue;
            K f = a(i, col) * inv;
            for (Index j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
        }
    }
    return d;
}

/// Fraction-free Bareiss determinant; needs only exact division in the
/// coefficient ring, so it also serves matrices over F[u].
template <class R, class DivFn>
R bareiss_det(Mat<R> a, DivFn exact_divide) {
    if (a.rows() != a.cols()) throw input_error("bareiss_det: matrix not square");
    const Index n = a.rows();
    if (n == 0) return R(1);
    R sign(1);
    R prev(1);
    for (Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == R(0)) {
            Index p = -1;
            for (Index i = k + 1; i < n; ++i)
                if (!(a(i, k) == R(0))) { p = i; break; }
            if (p < 0) return R(0);
            a.row(p).swap(a.row(k));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = exact_divide(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

template <class K>
Poly<K> poly_det(const Mat<Poly<K>>& a) {
    return bareiss_det<Poly<K>>(a, [](const Poly<K>& x, const Poly<K>& y) { return exact_div(x, y); });
}

/// Characteristic polynomial, monic of degree n: similarity reduction to
/// upper Hessenberg form followed by the minor recurrence.
template <class K>
Poly<K> charpoly(const Mat<K>& a0) {
    if (a0.rows() != a0.cols()) throw input_error("charpoly: matrix not square");
    Mat<K> a = a0;
    const Index n = a.rows();
    for (Index col = 0; col + 2 < n; ++col) {
        Index p = -1;
        for (Index i = col + 1; i < n; ++i)
            if (!(a(i, col) == K(0))) { p = i; break; }
        if (p < 0) continue;
        if (p != col + 1) {
            a.row(p).swap(a.row(col + 1));
            a.col(p).swap(a.col(col + 1));
        }
        K inv = K(1) / a(col + 1, col);
        for (Index i = col + 2; i < n; ++i) {
            if (a(i, col) == K(0)) continue;
            K f = a(i, col) * inv;
            for (Index j = 0; j < n; ++j) a(i, j) = a(i, j) - f * a(col + 1, j);
            for (Index j = 0; j < n; ++j) a(j, col + 1) = a(j, col + 1) + f * a(j, i);
        }
    }
    // p_k = (x - a[k-1][k-1]) p_{k-1} - sum_m a[k-1-m][k-1] (prod subdiagonals) p_{k-1-m}
    std::vector<Poly<K>> p(static_cast<size_t>(n) + 1);
    p[0] = Poly<K>(1);
    const Poly<K> x = Poly<K>::monomial(1);
    for (Index k = 1; k <= n; ++k) {
        Poly<K> acc = (x - Poly<K>(a(k - 1, k - 1))) * p[static_cast<size_t>(k - 1)];
        K chain(1);
        for (Index m = 1; m < k; ++m) {
            chain = chain * a(k - m, k - m - 1);
            if (chain == K(0)) break;
            K coeff = a(k - 1 - m, k - 1) * chain;
            if (coeff == K(0)) continue;
            acc = acc - Poly<K>(coeff) * p[static_cast<size_t>(k - 1 - m)];
        }
        p[static_cast<size_t>(k)] = std::move(acc);
    }
    return p[static_cast<size_t>(n)];
}

template <class K>
Mat<K> poly_at_matrix(const Poly<K>& p, const Mat<K>& a) {
    if (a.rows() != a.cols()) throw input_error("poly_at_matrix: matrix not square");
    const Index n = a.rows();
    Mat<K> acc = Mat<K>::Constant(n, n, K(0));
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        K c = p.coeff(i);
        for (Index d = 0; d < n; ++d) acc(d, d) = acc(d, d) + c;
    }
    return acc;
}

/// Evaluates a matrix over F[u] at u = x.
template <class K>
Mat<K> evaluate_poly_matrix(const Mat<Poly<K>>& a, const K& x) {
    Mat<K> r(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).template eval<K>(x);
    return r;
}

/// Companion matrix of a monic polynomial (multiplication-by-x action on F[x]/(p)).
template <class K>
Mat<K> companion(const Poly<K>& p) {
    if (!p.is_monic() || p.degree() < 1) throw input_error("companion: polynomial must be monic of degree >= 1");
    const Index n = p.degree();
    Mat<K> c = Mat<K>::Constant(n, n, K(0));
    for (Index i = 1; i < n; ++i) c(i, i - 1) = K(1);
    for (Index i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(static_cast<int>(i));
    return c;
}

}  // namespace mtorus
