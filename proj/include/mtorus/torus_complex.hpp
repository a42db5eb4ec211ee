#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mtorus/lmodule.hpp"
#include "mtorus/subspace.hpp"

namespace mtorus {

/// Chain data of the fiber: ranks per degree, boundary maps, and a chain map
/// covering the monodromy. boundary(k): C_k -> C_{k-1} for 1 <= k <= top.
template <class K>
struct FiberComplex {
    std::vector<int> ranks;            // degree 0..top
    std::vector<Mat<K>> boundaries;    // boundaries[k] = boundary C_k -> C_{k-1}; entry 0 unused
    std::vector<Mat<K>> monodromy;     // monodromy[k]: C_k -> C_k

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
    int rank_at(int k) const {
        if (k < 0 || k > top_degree()) return 0;
        return ranks[static_cast<size_t>(k)];
    }
    Mat<K> boundary(int k) const {  // zero map outside 1..top
        if (k >= 1 && k <= top_degree()) return boundaries[static_cast<size_t>(k)];
        return Mat<K>::Constant(rank_at(k - 1), rank_at(k), K(0));
    }
    const Mat<K>& monodromy_at(int k) const { return monodromy[static_cast<size_t>(k)]; }
};

/// Zero-differential fiber carrying given monodromy matrices; models the
/// situation where only the induced maps on (co)homology are known.
template <class K>
FiberComplex<K> fiber_from_monodromy(const std::vector<Mat<K>>& action) {
    FiberComplex<K> f;
    for (const auto& m : action) f.ranks.push_back(static_cast<int>(m.rows()));
    f.boundaries.resize(action.size());
    for (size_t k = 1; k < action.size(); ++k)
        f.boundaries[k] = Mat<K>::Constant(f.ranks[k - 1], f.ranks[k], K(0));
    if (!action.empty()) f.boundaries[0] = Mat<K>(0, 0);
    f.monodromy = action;
    return f;
}

template <class K>
struct FiberHomology {
    std::vector<int> dims;        // dim H_k, k = 0..top
    std::vector<Mat<K>> action;   // induced monodromy on H_k

    int dim_at(int k) const {
        if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
        return dims[static_cast<size_t>(k)];
    }
};

/// Validates shapes, boundary^2 = 0 and the chain-map condition; failures
/// name the offending degree.
template <class K>
void validate_fiber(const FiberComplex<K>& f) {
    const int top = f.top_degree();
    if (top < 0) throw input_error("fiber complex has no degrees");
    if (f.boundaries.size() != f.ranks.size() || f.monodromy.size() != f.ranks.size())
        throw input_error("fiber complex: boundaries/monodromy arrays must cover every degree");
    for (int k = 0; k <= top; ++k) {
        if (f.monodromy_at(k).rows() != f.rank_at(k) || f.monodromy_at(k).cols() != f.rank_at(k))
            throw input_error("monodromy in degree " + std::to_string(k) + " has the wrong shape");
        if (k >= 1) {
            const auto& b = f.boundaries[static_cast<size_t>(k)];
            if (b.rows() != f.rank_at(k - 1) || b.cols() != f.rank_at(k))
                throw input_error("boundary in degree " + std::to_string(k) + " has the wrong shape");
        }
    }
    for (int k = 2; k <= top; ++k) {
        Mat<K> sq = f.boundary(k - 1) * f.boundary(k);
        if (!is_zero_matrix(sq))
            throw input_error("boundary^2 != 0 between degrees " + std::to_string(k) + " and " + std::to_string(k - 2));
    }
    for (int k = 1; k <= top; ++k) {
        Mat<K> lhs = f.boundary(k) * f.monodromy_at(k);
        Mat<K> rhs = f.monodromy_at(k - 1) * f.boundary(k);
        if (!matrices_equal(lhs, rhs))
            throw input_error("chain-map condition fails in degree " + std::to_string(k));
    }
}

/// Homology of the fiber with the induced monodromy action per degree.
/// Rejects fibers whose induced maps are not invertible (the monodromy must
/// come from a homotopy equivalence).
template <class K>
FiberHomology<K> homology_of_fiber(const FiberComplex<K>& f, bool require_invertible = true) {
    FiberHomology<K> h;
    const int top = f.top_degree();
    for (int k = 0; k <= top; ++k) {
        Mat<K> cycles = kernel_basis<K>(f.boundary(k));
        Mat<K> bnd = column_space<K>(f.boundary(k + 1));
        // complement of im(boundary) inside ker(boundary): pivot columns of [bnd | cycles] landing in the cycle part
        Mat<K> joined(cycles.rows(), bnd.cols() + cycles.cols());
        joined.leftCols(bnd.cols()) = bnd;
        joined.rightCols(cycles.cols()) = cycles;
        Mat<K> reduced = joined;
        std::vector<Index> pivots = rref_in_place(reduced);
        std::vector<Index> complement;
        for (Index c : pivots)
            if (c >= bnd.cols()) complement.push_back(c);
        Mat<K> reps(cycles.rows(), static_cast<Index>(complement.size()));
        for (size_t i = 0; i < complement.size(); ++i) reps.col(static_cast<Index>(i)) = joined.col(complement[i]);

        Mat<K> basis(cycles.rows(), bnd.cols() + reps.cols());
        basis.leftCols(bnd.cols()) = bnd;
        basis.rightCols(reps.cols()) = reps;
        Mat<K> mapped = f.monodromy_at(k) * reps;
        Mat<K> coords = express_in_basis<K>(basis, mapped);  // chain map preserves cycles
        Mat<K> induced = coords.bottomRows(reps.cols());

        if (require_invertible && reps.cols() > 0 && det<K>(induced) == K(0))
            throw input_error("induced monodromy on homology is singular in degree " + std::to_string(k));
        h.dims.push_back(static_cast<int>(reps.cols()));
        h.action.push_back(std::move(induced));
    }
    return h;
}

/// Algebraic mapping torus over L: T_n = C_n + C_{n-1} with differential
/// (a, b) |-> (da + (u - f) b, -db). The u-action on homology realizes the
/// monodromy.
template <class K>
struct TorusComplex {
    std::vector<int> ranks;                 // T_n, n = 0..top+1
    std::vector<PolyMat<K>> differentials;  // differentials[n]: T_n -> T_{n-1}, n >= 1; entry 0 unused

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
    int rank_at(int n) const {
        if (n < 0 || n > top_degree()) return 0;
        return ranks[static_cast<size_t>(n)];
    }
    PolyMat<K> differential(int n) const {
        if (n >= 1 && n <= top_degree()) return differentials[static_cast<size_t>(n)];
        return PolyMat<K>::Constant(rank_at(n - 1), rank_at(n), Poly<K>(0));
    }
};

template <class K>
TorusComplex<K> build_torus_complex(const FiberComplex<K>& fiber) {
    validate_fiber(fiber);
    homology_of_fiber(fiber);  // rejects non-invertible induced maps
    const int top = fiber.top_degree();
    TorusComplex<K> t;
    for (int n = 0; n <= top + 1; ++n) t.ranks.push_back(fiber.rank_at(n) + fiber.rank_at(n - 1));
    t.differentials.resize(static_cast<size_t>(top) + 2);
    const Poly<K> u = Poly<K>::monomial(1);
    for (int n = 1; n <= top + 1; ++n) {
        const Index cn = fiber.rank_at(n), cn1 = fiber.rank_at(n - 1), cn2 = fiber.rank_at(n - 2);
        PolyMat<K> d = PolyMat<K>::Constant(cn1 + cn2, cn + cn1, Poly<K>(0));
        Mat<K> bn = fiber.boundary(n);
        for (Index i = 0; i < cn1; ++i)
            for (Index j = 0; j < cn; ++j) d(i, j) = Poly<K>(bn(i, j));
        const Mat<K>& f = fiber.monodromy_at(n - 1);
        for (Index i = 0; i < cn1; ++i)
            for (Index j = 0; j < cn1; ++j) {
                Poly<K> e = Poly<K>(-f(i, j));
                if (i == j) e += u;
                d(i, cn + j) = std::move(e);
            }
        Mat<K> bn1 = fiber.boundary(n - 1);
        for (Index i = 0; i < cn2; ++i)
            for (Index j = 0; j < cn1; ++j) d(cn1 + i, cn + j) = Poly<K>(-bn1(i, j));
        t.differentials[static_cast<size_t>(n)] = std::move(d);
    }
    for (int n = 1; n <= top; ++n) {
        PolyMat<K> sq = t.differentials[static_cast<size_t>(n)] * t.differentials[static_cast<size_t>(n + 1)];
        integrity_check(is_zero_matrix(sq), "torus complex differential does not square to zero");
    }
    return t;
}

/// Homology of the torus complex as finitely presented L-modules, degree by
/// degree: kernel basis from the Smith form of d_n, then the image of d_{n+1}
/// rewritten in that basis becomes the presentation matrix.
template <class K>
std::vector<FPModule<K>> l_homology(const TorusComplex<K>& t) {
    std::vector<FPModule<K>> out;
    const int top = t.top_degree();
    for (int n = 0; n <= top; ++n) {
        SmithNormalForm<K> s = smith_normal_form(t.differential(n));
        const Index r = s.diag_rank();
        const Index tn = t.rank_at(n);
        const Index kdim = tn - r;
        PolyMat<K> y = s.v_inv * t.differential(n + 1);
        // rows of y outside the kernel block must vanish (d d = 0)
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < y.cols(); ++j)
                integrity_check(y(i, j).is_zero(), "l_homology: image does not lie in the kernel");
        PolyMat<K> pres(kdim, y.cols());
        for (Index i = 0; i < kdim; ++i)
            for (Index j = 0; j < y.cols(); ++j) pres(i, j) = y(r + i, j);
        out.push_back(normalize(fp_module(std::move(pres))));
    }
    return out;
}

/// Dimensions of the cohomology with coefficients twisted by u = lambda,
/// over the field of lambda. Equals the homology dimensions of the
/// specialized complex; lambda must be non-zero (u acts invertibly).
template <class K>
std::vector<int> twisted_cohomology_dims(const TorusComplex<K>& t, const K& lambda) {
    if (lambda == K(0)) throw input_error("twisted coefficients need lambda != 0");
    std::vector<int> dims;
    const int top = t.top_degree();
    std::vector<Index> ranks(static_cast<size_t>(top) + 2, 0);
    for (int n = 1; n <= top; ++n) ranks[static_cast<size_t>(n)] = rank<K>(evaluate_poly_matrix(t.differential(n), lambda));
    for (int n = 0; n <= top; ++n)
        dims.push_back(static_cast<int>(t.rank_at(n) - ranks[static_cast<size_t>(n)] - ranks[static_cast<size_t>(n + 1)]));
    return dims;
}

/// Betti numbers of the total space from the fiber homology long exact
/// sequence: b_i = dim coker(f_i - 1) + dim ker(f_{i-1} - 1).
template <class K>
std::vector<int> milnor_betti(const FiberComplex<K>& fiber) {
    FiberHomology<K> h = homology_of_fiber(fiber);
    const int top = fiber.top_degree();
    auto rank_fm1 = [&](int k) -> Index {
        if (k < 0 || k > top) return 0;
        Mat<K> m = h.action[static_cast<size_t>(k)];
        for (Index i = 0; i < m.rows(); ++i) m(i, i) = m(i, i) - K(1);
        return rank<K>(m);
    };
    std::vector<int> betti;
    for (int i = 0; i <= top + 1; ++i) {
        Index coker = h.dim_at(i) - rank_fm1(i);
        Index ker = h.dim_at(i - 1) - rank_fm1(i - 1);
        betti.push_back(static_cast<int>(coker + ker));
    }
    return betti;
}

}  // namespace mtorus
