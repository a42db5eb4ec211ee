#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mtorus/linalg.hpp"

namespace mtorus {

/// Smith normal form over the Euclidean ring F[u]:
/// u * m * v = d with d diagonal, monic entries in a divisibility chain,
/// u and v products of elementary operations (unit constant determinant).
template <class K>
struct SmithNormalForm {
    PolyMat<K> u, v, d;
    PolyMat<K> u_inv, v_inv;
    K det_u = K(1), det_v = K(1);  // tracked through the elementary operations

    std::vector<Poly<K>> diagonal() const {
        std::vector<Poly<K>> out;
        for (Index i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
        return out;
    }
    Index diag_rank() const {
        Index r = 0;
        for (Index i = 0; i < std::min(d.rows(), d.cols()); ++i)
            if (!d(i, i).is_zero()) ++r;
        return r;
    }
};

template <class K>
SmithNormalForm<K> smith_normal_form(const PolyMat<K>& m) {
    using P = Poly<K>;
    SmithNormalForm<K> s;
    const Index rows = m.rows(), cols = m.cols();
    s.d = m;
    s.u = identity<P>(rows);
    s.u_inv = identity<P>(rows);
    s.v = identity<P>(cols);
    s.v_inv = identity<P>(cols);
    PolyMat<K>& a = s.d;

    auto swap_rows = [&](Index i, Index j) {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        s.u.row(i).swap(s.u.row(j));
        s.u_inv.col(i).swap(s.u_inv.col(j));
        s.det_u = -s.det_u;
    };
    auto swap_cols = [&](Index i, Index j) {
        if (i == j) return;
        a.col(i).swap(a.col(j));
        s.v.col(i).swap(s.v.col(j));
        s.v_inv.row(i).swap(s.v_inv.row(j));
        s.det_v = -s.det_v;
    };
    // row_i -= q * row_j
    auto row_sub = [&](Index i, Index j, const P& q) {
        if (q.is_zero()) return;
        for (Index c = 0; c < cols; ++c) a(i, c) = a(i, c) - q * a(j, c);
        for (Index c = 0; c < rows; ++c) s.u(i, c) = s.u(i, c) - q * s.u(j, c);
        for (Index r = 0; r < rows; ++r) s.u_inv(r, j) = s.u_inv(r, j) + q * s.u_inv(r, i);
    };
    // col_i -= q * col_j
    auto col_sub = [&](Index i, Index j, const P& q) {
        if (q.is_zero()) return;
        for (Index r = 0; r < rows; ++r) a(r, i) = a(r, i) - q * a(r, j);
        for (Index r = 0; r < rows; ++r) s.v(r, i) = s.v(r, i) - q * s.v(r, j);
        for (Index c = 0; c < cols; ++c) s.v_inv(j, c) = s.v_inv(j, c) + q * s.v_inv(i, c);
    };
    auto scale_row = [&](Index i, const K& c) {  // c != 0
        P pc{c};
        for (Index j = 0; j < cols; ++j) a(i, j) = a(i, j) * pc;
        for (Index j = 0; j < rows; ++j) s.u(i, j) = s.u(i, j) * pc;
        P pinv{K(1) / c};
        for (Index r = 0; r < rows; ++r) s.u_inv(r, i) = s.u_inv(r, i) * pinv;
        s.det_u = s.det_u * c;
    };

    const Index steps = std::min(rows, cols);
    for (Index t = 0; t < steps; ++t) {
        // locate a minimal-degree nonzero pivot in the trailing submatrix
        auto find_pivot = [&]() -> std::pair<Index, Index> {
            Index bi = -1, bj = -1;
            int bd = -1;
            for (Index i = t; i < rows; ++i)
                for (Index j = t; j < cols; ++j) {
                    if (a(i, j).is_zero()) continue;
                    if (bd < 0 || a(i, j).degree() < bd) {
                        bd = a(i, j).degree();
                        bi = i;
                        bj = j;
                    }
                }
            return {bi, bj};
        };

        for (;;) {
            auto [pi, pj] = find_pivot();
            if (pi < 0) goto done;  // trailing submatrix is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (Index i = t + 1; i < rows; ++i) {
                if (a(i, t).is_zero()) continue;
                auto [q, r] = divmod(a(i, t), a(t, t));
                row_sub(i, t, q);
                if (!r.is_zero()) clean = false;
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (a(t, j).is_zero()) continue;
                auto [q, r] = divmod(a(t, j), a(t, t));
                col_sub(j, t, q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;  // smaller-degree entries appeared; re-pick the pivot

            // pivot now alone in its row and column; enforce divisibility of the rest
            bool fixed = false;
            for (Index i = t + 1; i < rows && !fixed; ++i)
                for (Index j = t + 1; j < cols && !fixed; ++j) {
                    if (a(i, j).is_zero()) continue;
                    if (!divmod(a(i, j), a(t, t)).second.is_zero()) {
                        row_sub(t, i, P(-1));  // row_t += row_i, reintroduces the bad entry next to the pivot
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        // normalize the pivot to monic
        if (!a(t, t).is_monic()) scale_row(t, K(1) / a(t, t).leading());
    }
done:
    for (Index t = 0; t < steps; ++t)
        if (!a(t, t).is_zero() && !a(t, t).is_monic()) scale_row(t, K(1) / a(t, t).leading());
    return s;
}

/// Finitely presented module over L = F[u, 1/u], given as the cokernel of a
/// presentation matrix over F[u] (rows = generators, columns = relations).
template <class K>
struct FPModule {
    PolyMat<K> presentation;
    // set by normalize():
    int free_rank = -1;                       // -1 marks "not normalized yet"
    std::vector<Poly<K>> invariant_factors;   // monic, u-unit-free, d1 | d2 | ...

    bool is_normalized() const { return free_rank >= 0; }
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    int torsion_dim() const {
        int d = 0;
        for (const auto& f : invariant_factors) d += f.degree();
        return d;
    }
};

template <class K>
FPModule<K> fp_module(PolyMat<K> presentation) {
    FPModule<K> m;
    m.presentation = std::move(presentation);
    return m;
}

/// Invariant-factor decomposition. Powers of u are stripped from the factors
/// (u is invertible in L) and unit factors are dropped.
template <class K>
FPModule<K> normalize(const FPModule<K>& module) {
    FPModule<K> out = module;
    out.invariant_factors.clear();
    SmithNormalForm<K> s = smith_normal_form(module.presentation);
    const Poly<K> u_poly = Poly<K>::monomial(1);
    Index nonzero = 0;
    for (const auto& d : s.diagonal()) {
        if (d.is_zero()) continue;
        ++nonzero;
        Poly<K> f = d;
        int v = f.coeff(0) == K(0) ? valuation(f, u_poly) : 0;
        for (int i = 0; i < v; ++i) f = exact_div(f, u_poly);
        if (f.degree() >= 1) out.invariant_factors.push_back(f.monic());
    }
    out.free_rank = static_cast<int>(module.presentation.rows() - nonzero);
    return out;
}

/// Multiset of exponents r of the p-primary cyclic summands L/(p^r), one
/// entry per invariant factor with positive p-valuation. Sorted descending.
template <class K>
std::vector<int> primary_exponents(const FPModule<K>& module, const Poly<K>& p) {
    if (!module.is_normalized()) throw input_error("primary_exponents: module must be normalized");
    if (p.degree() < 1) throw input_error("primary_exponents: factor must be non-constant");
    std::vector<int> out;
    for (const auto& f : module.invariant_factors) {
        int v = valuation(f, p.monic());
        if (v > 0) out.push_back(v);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// The multiplication-by-u automorphism of the torsion submodule, realized
/// as the direct sum of companion blocks of the invariant factors.
template <class K>
struct TorsionAction {
    int dim = 0;
    Mat<K> action;
};

template <class K>
TorsionAction<K> torsion_action(const FPModule<K>& module) {
    if (!module.is_normalized()) throw input_error("torsion_action: module must be normalized");
    TorsionAction<K> t;
    t.dim = module.torsion_dim();
    t.action = Mat<K>::Constant(t.dim, t.dim, K(0));
    Index off = 0;
    for (const auto& f : module.invariant_factors) {
        const Index d = f.degree();
        t.action.block(off, off, d, d) = companion(f);
        off += d;
    }
    return t;
}

template <class K>
bool same_invariant_factors(const FPModule<K>& a, const FPModule<K>& b) {
    if (a.free_rank != b.free_rank) return false;
    if (a.invariant_factors.size() != b.invariant_factors.size()) return false;
    for (size_t i = 0; i < a.invariant_factors.size(); ++i)
        if (a.invariant_factors[i] != b.invariant_factors[i]) return false;
    return true;
}

}  // namespace mtorus
