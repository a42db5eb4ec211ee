#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "mtorus/lmodule.hpp"
#include "mtorus/subspace.hpp"

namespace mtorus {

/// The exact couple of a graded torsion-plus-free L-module family D with
/// i = multiplication by (u - lambda). In degree k the E-term is
///   E^k = coker(i | D_{k-1})  (+)  ker(i | D_k),
/// so j: D -> E has degree +1 and l: E -> D has degree 0. Deriving the couple
/// replaces D by i(D); the iteration state tracks bases of im(N^{page-1})
/// and ker(N^{page-1}) on the torsion parts, where N is the u-action minus
/// lambda. Free summands contribute a constant cokernel in every page.
template <class K>
struct GradedCouple {
    K lambda;
    int min_deg = 0;

    // per slot (fiber-side degree), fixed at build time:
    std::vector<Mat<K>> u_action;            // torsion u-action (companion form)
    std::vector<int> free_ranks;
    std::vector<std::vector<int>> exponents; // (u-lambda)-primary exponents, descending
    std::vector<Mat<K>> n_map;               // N = u_action - lambda
    std::vector<Mat<K>> im_n;
    std::vector<Mat<K>> ker_n;
    std::vector<Index> rank_n;

    // derived-couple iteration state:
    int page = 1;
    std::vector<Mat<K>> power_image;   // basis of N^{page-1} T
    std::vector<Mat<K>> power_kernel;  // basis of ker N^{page-1}

    int slot_count() const { return static_cast<int>(u_action.size()); }
    int max_deg() const { return min_deg + slot_count() - 1; }
    bool has_slot(int deg) const { return deg >= min_deg && deg <= max_deg(); }
    int slot(int deg) const { return deg - min_deg; }

    int torsion_dim_at(int deg) const {
        return has_slot(deg) ? static_cast<int>(u_action[static_cast<size_t>(slot(deg))].rows()) : 0;
    }
    int free_rank_at(int deg) const {
        return has_slot(deg) ? free_ranks[static_cast<size_t>(slot(deg))] : 0;
    }
    const std::vector<int>& exponents_at(int deg) const {
        static const std::vector<int> empty;
        return has_slot(deg) ? exponents[static_cast<size_t>(slot(deg))] : empty;
    }
};

/// Page dimensions and degeneration data of a spectral sequence, degrees
/// first_deg .. first_deg + width - 1, pages 1 .. r_max.
struct PageTable {
    int first_deg = 0;
    int r_max = 1;
    std::vector<std::vector<int>> dims;      // dims[r-1][k - first_deg]
    std::vector<std::optional<int>> sigma;   // degeneration sheet; nullopt = not certified at this r_max
    std::vector<int> last_outgoing;          // last page with a non-zero differential leaving this degree
    int width() const { return dims.empty() ? 0 : static_cast<int>(dims[0].size()); }
    bool all_certified() const {
        for (const auto& s : sigma)
            if (!s) return false;
        return true;
    }
};

inline bool operator==(const PageTable& a, const PageTable& b) {
    return a.first_deg == b.first_deg && a.r_max == b.r_max && a.dims == b.dims && a.sigma == b.sigma &&
           a.last_outgoing == b.last_outgoing;
}

/// Builds the couple from normalized modules occupying degrees
/// min_deg .. min_deg + modules.size() - 1. Requires lambda != 0.
template <class K>
GradedCouple<K> build_couple(const std::vector<FPModule<K>>& modules, const K& lambda, int min_deg = 0) {
    if (lambda == K(0)) throw input_error("the couple needs lambda != 0 (u acts invertibly)");
    GradedCouple<K> c;
    c.lambda = lambda;
    c.min_deg = min_deg;
    const Poly<K> factor = Poly<K>::from_coeffs({-lambda, K(1)});
    for (const auto& m : modules) {
        if (!m.is_normalized()) throw input_error("build_couple: modules must be normalized");
        TorsionAction<K> act = torsion_action(m);
        Mat<K> n = act.action;
        for (Index i = 0; i < n.rows(); ++i) n(i, i) = n(i, i) - lambda;
        c.u_action.push_back(std::move(act.action));
        c.free_ranks.push_back(m.free_rank);
        c.exponents.push_back(primary_exponents(m, factor));
        c.im_n.push_back(column_space<K>(n));
        c.ker_n.push_back(kernel_basis<K>(n));
        c.rank_n.push_back(static_cast<Index>(c.im_n.back().cols()));
        c.power_image.push_back(identity<K>(n.rows()));
        c.power_kernel.push_back(Mat<K>(n.rows(), 0));
        c.n_map.push_back(std::move(n));
    }
    return c;
}

/// One derivation step: D passes to i(D).
template <class K>
GradedCouple<K> derive(GradedCouple<K> c) {
    for (int s = 0; s < c.slot_count(); ++s) {
        auto si = static_cast<size_t>(s);
        c.power_image[si] = image_of_space<K>(c.n_map[si], c.power_image[si]);
        c.power_kernel[si] = preimage<K>(c.n_map[si], c.power_kernel[si]);
    }
    c.page += 1;
    return c;
}

namespace detail {

// z-dimension at a slot: classes of E in the current page whose l-image
// survives into i^{page-1}(D), i.e. dim(ker N ∩ im N^{page-1}).
template <class K>
int z_dim(const GradedCouple<K>& c, int deg) {
    if (!c.has_slot(deg)) return 0;
    auto s = static_cast<size_t>(c.slot(deg));
    return static_cast<int>(space_dim<K>(space_intersection<K>(c.ker_n[s], c.power_image[s])));
}

// b-dimension at a slot: boundaries j(ker N^{page-1}) inside coker(N),
// i.e. dim ker N^{page-1} - dim(ker N^{page-1} ∩ im N).
template <class K>
int b_dim(const GradedCouple<K>& c, int deg) {
    if (!c.has_slot(deg)) return 0;
    auto s = static_cast<size_t>(c.slot(deg));
    int kdim = static_cast<int>(c.power_kernel[s].cols());
    int inside = static_cast<int>(space_dim<K>(space_intersection<K>(c.power_kernel[s], c.im_n[s])));
    return kdim - inside;
}

template <class K>
int coker_dim(const GradedCouple<K>& c, int deg) {
    if (!c.has_slot(deg)) return 0;
    return c.torsion_dim_at(deg) - static_cast<int>(c.rank_n[static_cast<size_t>(c.slot(deg))]);
}

inline void fill_sigma(PageTable& t, const std::vector<std::vector<int>>& exps_by_degree) {
    // exps_by_degree[k - first_deg] = exponents feeding degree k (both adjacent slots)
    const int width = t.width();
    t.sigma.assign(static_cast<size_t>(width), std::nullopt);
    for (int k = 0; k < width; ++k) {
        int bound = 1;
        for (int e : exps_by_degree[static_cast<size_t>(k)]) bound = std::max(bound, e + 1);
        if (t.r_max < bound) continue;  // cannot certify degeneration at this r_max
        int m = t.r_max;
        while (m > 1 && t.dims[static_cast<size_t>(m - 2)][static_cast<size_t>(k)] ==
                            t.dims[static_cast<size_t>(t.r_max - 1)][static_cast<size_t>(k)])
            --m;
        t.sigma[static_cast<size_t>(k)] = m;
    }
}

}  // namespace detail

/// E-term dimensions of the current page (over the field of lambda),
/// degrees min_deg .. max_deg + 1.
template <class K>
std::vector<int> page_dims(const GradedCouple<K>& c) {
    std::vector<int> out;
    for (int k = c.min_deg; k <= c.max_deg() + 1; ++k) {
        int dim = c.free_rank_at(k - 1) + detail::coker_dim(c, k - 1) - detail::b_dim(c, k - 1) + detail::z_dim(c, k);
        out.push_back(dim);
    }
    return out;
}

/// Runs the literal derived-couple iteration for r_max pages. sigma is the
/// least sheet from which the degree's dimension is frozen, certified by the
/// nilpotency bound (1 + max primary exponent over the two feeding slots);
/// when r_max is below that bound the degree is reported as not certified.
template <class K>
PageTable pages(const GradedCouple<K>& couple, int r_max) {
    if (r_max < 1) throw input_error("pages: r_max must be >= 1");
    PageTable t;
    t.first_deg = couple.min_deg;
    t.r_max = r_max;
    const int width = couple.max_deg() + 2 - couple.min_deg;

    GradedCouple<K> c = couple;
    std::vector<std::vector<int>> z(static_cast<size_t>(r_max) + 2), b(static_cast<size_t>(r_max) + 2);
    for (int r = 1; r <= r_max + 1; ++r) {
        integrity_check(c.page == r, "pages: page counter out of step");
        auto& zr = z[static_cast<size_t>(r)];
        auto& br = b[static_cast<size_t>(r)];
        for (int k = c.min_deg - 1; k <= c.max_deg() + 1; ++k) {
            zr.push_back(detail::z_dim(c, k));
            br.push_back(detail::b_dim(c, k));
        }
        if (r <= r_max) c = derive(std::move(c));
    }
    auto zr_at = [&](int r, int deg) { return z[static_cast<size_t>(r)][static_cast<size_t>(deg - (couple.min_deg - 1))]; };
    auto br_at = [&](int r, int deg) { return b[static_cast<size_t>(r)][static_cast<size_t>(deg - (couple.min_deg - 1))]; };

    t.dims.assign(static_cast<size_t>(r_max), {});
    for (int r = 1; r <= r_max; ++r) {
        auto& row = t.dims[static_cast<size_t>(r - 1)];
        for (int k = couple.min_deg; k <= couple.max_deg() + 1; ++k) {
            int dim = couple.free_rank_at(k - 1) + detail::coker_dim(couple, k - 1) - br_at(r, k - 1) + zr_at(r, k);
            row.push_back(dim);
        }
        if (r >= 2) {
            // exactness bookkeeping: each page drops by (outgoing rank) + (incoming rank)
            for (int k = couple.min_deg; k <= couple.max_deg() + 1; ++k) {
                int idx = k - couple.min_deg;
                int expect = t.dims[static_cast<size_t>(r - 2)][static_cast<size_t>(idx)] -
                             (zr_at(r - 1, k) - zr_at(r, k)) - (br_at(r, k - 1) - br_at(r - 1, k - 1));
                integrity_check(row[static_cast<size_t>(idx)] == expect, "pages: page drop violates exactness counts");
            }
        }
    }
    t.last_outgoing.assign(static_cast<size_t>(width), 0);
    for (int k = couple.min_deg; k <= couple.max_deg() + 1; ++k) {
        int last = 0;
        for (int r = 1; r <= r_max; ++r)
            if (zr_at(r, k) > zr_at(r + 1, k)) last = r;
        t.last_outgoing[static_cast<size_t>(k - couple.min_deg)] = last;
    }
    std::vector<std::vector<int>> feed(static_cast<size_t>(width));
    for (int k = couple.min_deg; k <= couple.max_deg() + 1; ++k) {
        auto& v = feed[static_cast<size_t>(k - couple.min_deg)];
        for (int e : couple.exponents_at(k - 1)) v.push_back(e);
        for (int e : couple.exponents_at(k)) v.push_back(e);
    }
    detail::fill_sigma(t, feed);
    return t;
}

/// Closed-form page table computed from the primary exponents and free ranks
/// alone: dims[r][k] = free(k-1) + #{e in exps(k-1) : e >= r} + #{e in exps(k) : e >= r}.
/// Must agree with the literal iteration on every input; the analysis
/// pipeline asserts that agreement.
inline PageTable closed_form_pages(const std::vector<std::vector<int>>& exponents,
                                   const std::vector<int>& free_ranks, int min_deg, int r_max) {
    if (r_max < 1) throw input_error("closed_form_pages: r_max must be >= 1");
    if (exponents.size() != free_ranks.size())
        throw input_error("closed_form_pages: exponents/free_ranks size mismatch");
    const int slots = static_cast<int>(exponents.size());
    const int width = slots + 1;
    auto exps_at = [&](int deg) -> const std::vector<int>* {
        int s = deg - min_deg;
        if (s < 0 || s >= slots) return nullptr;
        return &exponents[static_cast<size_t>(s)];
    };
    auto free_at = [&](int deg) -> int {
        int s = deg - min_deg;
        if (s < 0 || s >= slots) return 0;
        return free_ranks[static_cast<size_t>(s)];
    };
    auto count_ge = [](const std::vector<int>* v, int r) {
        if (!v) return 0;
        int n = 0;
        for (int e : *v)
            if (e >= r) ++n;
        return n;
    };
    PageTable t;
    t.first_deg = min_deg;
    t.r_max = r_max;
    t.dims.assign(static_cast<size_t>(r_max), {});
    for (int r = 1; r <= r_max; ++r) {
        auto& row = t.dims[static_cast<size_t>(r - 1)];
        for (int k = min_deg; k <= min_deg + slots; ++k)
            row.push_back(free_at(k - 1) + count_ge(exps_at(k - 1), r) + count_ge(exps_at(k), r));
    }
    t.last_outgoing.assign(static_cast<size_t>(width), 0);
    for (int k = min_deg; k <= min_deg + slots; ++k) {
        int last = 0;
        if (const auto* v = exps_at(k))
            for (int e : *v)
                if (e <= r_max) last = std::max(last, e);
        t.last_outgoing[static_cast<size_t>(k - min_deg)] = last;
    }
    std::vector<std::vector<int>> feed(static_cast<size_t>(width));
    for (int k = min_deg; k <= min_deg + slots; ++k) {
        auto& v = feed[static_cast<size_t>(k - min_deg)];
        if (const auto* e = exps_at(k - 1)) v.insert(v.end(), e->begin(), e->end());
        if (const auto* e = exps_at(k)) v.insert(v.end(), e->begin(), e->end());
    }
    detail::fill_sigma(t, feed);
    return t;
}

/// Maximal length of a non-zero iterated product per degree: sigma - 1.
/// Uncertified degrees propagate as nullopt.
inline std::vector<std::optional<int>> massey_lengths(const PageTable& t) {
    std::vector<std::optional<int>> out;
    for (const auto& s : t.sigma)
        out.push_back(s ? std::optional<int>(*s - 1) : std::nullopt);
    return out;
}

}  // namespace mtorus
