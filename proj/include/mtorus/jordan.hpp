#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "mtorus/factor.hpp"
#include "mtorus/linalg.hpp"

namespace mtorus {

/// Jordan structure of a square matrix at one irreducible factor p of its
/// characteristic polynomial: the partition of block sizes, the maximal block
/// size, and the dimension of the corresponding invariant subspace.
template <class K>
struct JordanProfile {
    Poly<K> eigen_factor;
    std::vector<int> block_sizes;  // non-increasing; empty when p does not divide the charpoly
    int nu = 0;                    // max block size, 0 by convention when the profile is empty
    int invariant_dim = 0;         // sum(block_sizes) * deg(eigen_factor)
};

namespace detail {

// Kernel dimensions of p(A)^j for j = 1, 2, ... until they stabilize.
template <class K>
std::vector<Index> kernel_dim_tower(const Mat<K>& a, const Poly<K>& p) {
    Mat<K> b = poly_at_matrix(p, a);
    Mat<K> power = b;
    std::vector<Index> dims;
    for (Index j = 1; j <= a.rows() + 1; ++j) {
        Index d = a.cols() - rank<K>(power);
        if (!dims.empty() && d == dims.back()) break;
        dims.push_back(d);
        power = power * b;
    }
    return dims;
}

inline bool proven_irreducible_over_q(const Poly<Rational>& p) {
    auto f = rational_irreducible_factors(p);
    return f.size() == 1 && f[0].multiplicity == 1 && f[0].proven;
}

}  // namespace detail

/// Maximal j with ker p(A)^j != ker p(A)^{j-1}; 0 when p(A) is invertible.
/// Well-defined for any non-constant p, irreducible or not.
template <class K>
int nilpotency_index(const Mat<K>& a, const Poly<K>& p) {
    if (a.rows() != a.cols()) throw input_error("nilpotency_index: matrix not square");
    if (p.degree() < 1) throw input_error("nilpotency_index: factor must be non-constant");
    auto dims = detail::kernel_dim_tower(a, p);
    if (!dims.empty() && dims[0] == 0) return 0;
    return static_cast<int>(dims.size());
}

/// Profile at an irreducible p, computed over the base field: block counts
/// come from the kernel-dimension increments of p(A)^j divided by deg p.
/// Over Q the irreducibility precondition is screened; over extension fields
/// only linear factors are accepted.
template <class K>
JordanProfile<K> jordan_profile(const Mat<K>& a, const Poly<K>& p) {
    if (a.rows() != a.cols()) throw input_error("jordan_profile: matrix not square");
    if (p.degree() < 1) throw input_error("jordan_profile: factor must be non-constant");
    if constexpr (std::is_same_v<K, Rational>) {
        if (!detail::proven_irreducible_over_q(p.monic()))
            throw input_error("jordan_profile: factor " + p.str() + " is not (provably) irreducible");
    } else {
        if (p.degree() != 1)
            throw input_error("jordan_profile: only linear factors are supported over extension fields");
    }
    const int d = p.degree();
    auto dims = detail::kernel_dim_tower(a, p);
    JordanProfile<K> out;
    out.eigen_factor = p.monic();
    if (dims.empty() || dims[0] == 0) return out;

    std::vector<int> increments;  // increments[j] = #blocks of size > j
    Index prev = 0;
    for (Index dj : dims) {
        Index inc = dj - prev;
        integrity_check(inc % d == 0, "jordan_profile: kernel increment not divisible by deg p");
        increments.push_back(static_cast<int>(inc / d));
        prev = dj;
    }
    for (size_t j = 1; j < increments.size(); ++j)
        integrity_check(increments[j] <= increments[j - 1], "jordan_profile: increments must be non-increasing");

    const int jmax = static_cast<int>(increments.size());
    for (int size = jmax; size >= 1; --size) {
        int count = increments[static_cast<size_t>(size - 1)] - (size < jmax ? increments[static_cast<size_t>(size)] : 0);
        for (int c = 0; c < count; ++c) out.block_sizes.insert(out.block_sizes.begin(), size);
    }
    std::sort(out.block_sizes.rbegin(), out.block_sizes.rend());
    out.nu = out.block_sizes.empty() ? 0 : out.block_sizes.front();
    int total = 0;
    for (int b : out.block_sizes) total += b;
    out.invariant_dim = total * d;
    return out;
}

/// Maximal Jordan block size of `a` at the eigenvalue `lambda` (0 when
/// lambda is not an eigenvalue).
template <class K>
int max_jordan_block(const Mat<K>& a, const K& lambda) {
    Poly<K> p = Poly<K>::from_coeffs({-lambda, K(1)});
    return jordan_profile(a, p).nu;
}

}  // namespace mtorus
