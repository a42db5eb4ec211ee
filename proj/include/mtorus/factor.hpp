#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "mtorus/poly.hpp"
#include "mtorus/rational.hpp"

namespace mtorus {

struct IrreducibleFactor {
    Poly<Rational> factor;  // monic
    int multiplicity = 1;
    bool proven = true;  // irreducibility certified by the screen
};

namespace detail {

using ZP = std::vector<mpz_class>;  // integer poly, constant first, monic

inline int zdeg(const ZP& p) { return static_cast<int>(p.size()) - 1; }

inline mpz_class zeval(const ZP& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Exact division of monic-divisor situations; returns quotient iff remainder is zero.
inline std::optional<ZP> zdiv_exact(const ZP& a, const ZP& d) {
    if (d.empty() || d.back() != 1) return std::nullopt;
    ZP rem = a;
    int dd = zdeg(d), dr = zdeg(rem);
    if (dr < dd) return std::nullopt;
    ZP quot(static_cast<size_t>(dr - dd) + 1, mpz_class(0));
    while (dr >= dd) {
        mpz_class f = rem[static_cast<size_t>(dr)];
        quot[static_cast<size_t>(dr - dd)] = f;
        for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(dr - dd + i)] -= f * d[static_cast<size_t>(i)];
        while (dr >= 0 && rem[static_cast<size_t>(dr)] == 0) --dr;
    }
    if (dr >= 0) return std::nullopt;
    return quot;
}

// Signed divisors of n != 0. Sets exhaustive=false when trial division or the
// divisor count blows past the caps; callers must then treat "not found" as
// inconclusive.
inline std::vector<mpz_class> signed_divisors(mpz_class n, bool& exhaustive) {
    exhaustive = true;
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> primes;
    mpz_class d = 2;
    long steps = 0;
    while (n > 1) {
        if (++steps > 200000 || (d > 1 && mpz_sizeinbase(d.get_mpz_t(), 2) > 40)) {
            // Remaining cofactor: usable as a single divisor only if prime.
            if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
                primes.emplace_back(n, 1);
            } else {
                exhaustive = false;
            }
            break;
        }
        if (d * d > n) {
            primes.emplace_back(n, 1);
            break;
        }
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            primes.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    std::vector<mpz_class> divs{1};
    for (auto& [p, e] : primes) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int j = 1; j <= e; ++j) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
            if (divs.size() > 8192) { exhaustive = false; divs.resize(8192); break; }
        }
    }
    size_t m = divs.size();
    divs.reserve(2 * m);
    for (size_t i = 0; i < m; ++i) divs.push_back(-divs[i]);
    return divs;
}

struct FactorSearch {
    ZP q;                 // current polynomial, constant term != 0
    bool root_exhaustive = true;
    bool quad_exhaustive = true;
    bool cubic_exhaustive = true;
    bool quartic_exhaustive = true;

    std::optional<mpz_class> find_root() {
        bool ex = true;
        auto divs = signed_divisors(q[0], ex);
        root_exhaustive = root_exhaustive && ex;
        for (auto& r : divs)
            if (zeval(q, r) == 0) return r;
        return std::nullopt;
    }

    // Searches a monic factor x^2 + a x + b. Constraints: b | q(0),
    // (1 + a + b) | q(1), so a comes from the divisors of q(1).
    std::optional<ZP> find_quadratic() {
        bool ex0 = true, ex1 = true;
        auto divs0 = signed_divisors(q[0], ex0);
        mpz_class q1 = zeval(q, 1), qm1 = zeval(q, -1);
        if (q1 == 0 || qm1 == 0) return std::nullopt;  // a root; caller strips those first
        auto divs1 = signed_divisors(q1, ex1);
        quad_exhaustive = quad_exhaustive && ex0 && ex1;
        for (auto& b : divs0)
            for (auto& t : divs1) {
                mpz_class a = t - 1 - b;
                mpz_class v = 1 - a + b;  // candidate value at -1
                if (v == 0 || qm1 % v != 0) continue;
                ZP f{b, a, 1};
                if (auto quot = zdiv_exact(q, f)) { (void)quot; return f; }
            }
        return std::nullopt;
    }

    // Monic cubic x^3 + a x^2 + b x + c from value constraints at 0, 1, -1.
    std::optional<ZP> find_cubic() {
        if (zdeg(q) < 6) return std::nullopt;  // cubic factor of deg<6 implies a shorter cofactor, found earlier
        bool ex0 = true, ex1 = true, ex2 = true;
        auto divs0 = signed_divisors(q[0], ex0);
        mpz_class q1 = zeval(q, 1), qm1 = zeval(q, -1);
        if (q1 == 0 || qm1 == 0) return std::nullopt;
        auto divs1 = signed_divisors(q1, ex1);
        auto divs2 = signed_divisors(qm1, ex2);
        cubic_exhaustive = cubic_exhaustive && ex0 && ex1 && ex2;
        long work = 0;
        for (auto& c : divs0)
            for (auto& d1 : divs1)
                for (auto& d2 : divs2) {
                    if (++work > 2000000) { cubic_exhaustive = false; return std::nullopt; }
                    // d1 = 1 + a + b + c, d2 = -1 + a - b + c
                    mpz_class s = d1 + d2;  // = 2a + 2c
                    if (s % 2 != 0) continue;
                    mpz_class a = s / 2 - c;
                    mpz_class t = d1 - d2;  // = 2 + 2b
                    if (t % 2 != 0) continue;
                    mpz_class b = t / 2 - 1;
                    ZP f{c, b, a, 1};
                    if (auto quot = zdiv_exact(q, f)) { (void)quot; return f; }
                }
        return std::nullopt;
    }

    // Monic quartic from value constraints at 0, 1, -1, 2.
    std::optional<ZP> find_quartic() {
        if (zdeg(q) < 8) return std::nullopt;
        bool ex0 = true, ex1 = true, ex2 = true, ex3 = true;
        auto divs0 = signed_divisors(q[0], ex0);
        mpz_class q1 = zeval(q, 1), qm1 = zeval(q, -1), q2 = zeval(q, 2);
        if (q1 == 0 || qm1 == 0 || q2 == 0) return std::nullopt;
        auto divs1 = signed_divisors(q1, ex1);
        auto divs2 = signed_divisors(qm1, ex2);
        auto divs3 = signed_divisors(q2, ex3);
        quartic_exhaustive = quartic_exhaustive && ex0 && ex1 && ex2 && ex3;
        long work = 0;
        for (auto& e : divs0)
            for (auto& d1 : divs1)
                for (auto& d2 : divs2) {
                    // d1 = 1 + a + b + c + e, d2 = 1 - a + b - c + e
                    mpz_class sac = d1 - d2;  // = 2a + 2c
                    mpz_class sbe = d1 + d2;  // = 2 + 2b + 2e
                    if (sac % 2 != 0 || sbe % 2 != 0) continue;
                    mpz_class b = sbe / 2 - 1 - e;
                    for (auto& d3 : divs3) {
                        if (++work > 2000000) { quartic_exhaustive = false; return std::nullopt; }
                        // d3 = 16 + 8a + 4b + 2c + e  and  a + c = sac/2
                        mpz_class twoc_coeff = d3 - 16 - 4 * b - e - 4 * sac;  // = 8a+2c - 8(a+c) = -6c
                        if (twoc_coeff % 6 != 0) continue;
                        mpz_class c = -twoc_coeff / 6;
                        mpz_class a = sac / 2 - c;
                        ZP f{e, c, b, a, 1};
                        if (auto quot = zdiv_exact(q, f)) { (void)quot; return f; }
                    }
                }
        return std::nullopt;
    }
};

// Monic integer squarefree factorization step: splits q fully into factors
// found by degree-bounded searches; `proven` marks certified irreducibility.
void factor_squarefree_integer(const ZP& q, std::vector<std::pair<ZP, bool>>& out);

inline void factor_squarefree_integer(const ZP& q0, std::vector<std::pair<ZP, bool>>& out) {
    ZP q = q0;
    // strip x^v
    size_t v = 0;
    while (v < q.size() && q[v] == 0) ++v;
    if (v > 0) {
        out.emplace_back(ZP{0, 1}, true);  // multiplicity handled by caller (squarefree input: v <= 1)
        q.erase(q.begin(), q.begin() + static_cast<long>(v));
    }
    if (zdeg(q) <= 0) return;
    if (zdeg(q) == 1) { out.emplace_back(q, true); return; }

    FactorSearch fs{q};
    // linear factors
    while (zdeg(fs.q) > 1) {
        auto r = fs.find_root();
        if (!r) break;
        ZP lin{-*r, 1};
        out.emplace_back(lin, true);
        fs.q = *zdiv_exact(fs.q, lin);
    }
    // higher-degree factors, smallest first; each find recurses via loop
    for (;;) {
        int d = zdeg(fs.q);
        if (d <= 1) {
            if (d == 1) out.emplace_back(fs.q, true);
            return;
        }
        if (d <= 3) {
            // no rational root => irreducible for deg 2, 3
            out.emplace_back(fs.q, fs.root_exhaustive);
            return;
        }
        if (auto f2 = fs.find_quadratic()) {
            out.emplace_back(*f2, true);
            fs.q = *zdiv_exact(fs.q, *f2);
            continue;
        }
        if (auto f3 = fs.find_cubic()) {
            out.emplace_back(*f3, true);
            fs.q = *zdiv_exact(fs.q, *f3);
            continue;
        }
        if (auto f4 = fs.find_quartic()) {
            out.emplace_back(*f4, true);
            fs.q = *zdiv_exact(fs.q, *f4);
            continue;
        }
        // No factor of degree <= 4. Certified irreducible when every search
        // whose range covers d/2 was exhaustive.
        bool proven;
        if (d <= 3) proven = fs.root_exhaustive;
        else if (d <= 5) proven = fs.root_exhaustive && fs.quad_exhaustive;
        else if (d <= 7) proven = fs.root_exhaustive && fs.quad_exhaustive && fs.cubic_exhaustive;
        else if (d <= 9) proven = fs.root_exhaustive && fs.quad_exhaustive && fs.cubic_exhaustive && fs.quartic_exhaustive;
        else proven = false;
        out.emplace_back(fs.q, proven);
        return;
    }
}

// N^deg * p(y/N) for monic rational p, N = lcm of coefficient denominators.
inline std::pair<ZP, mpz_class> to_integer_monic(const Poly<Rational>& p) {
    mpz_class N = 1;
    for (const auto& c : p.coeffs()) N = N / gcd(N, c.denominator()) * c.denominator();
    const int d = p.degree();
    ZP out(static_cast<size_t>(d) + 1);
    mpz_class scale = 1;  // N^(d-i)
    for (int i = d; i >= 0; --i) {
        mpq_class q = p.coeff(i).raw() * scale;
        out[static_cast<size_t>(i)] = q.get_num();  // exact by construction
        scale *= N;
    }
    return {out, N};
}

inline Poly<Rational> from_integer_factor(const ZP& f, const mpz_class& N) {
    const int m = zdeg(f);
    std::vector<Rational> c(static_cast<size_t>(m) + 1);
    mpz_class scale = 1;  // N^(m-i)
    for (int i = m; i >= 0; --i) {
        c[static_cast<size_t>(i)] = Rational(mpq_class(f[static_cast<size_t>(i)], scale));
        scale *= N;
    }
    return Poly<Rational>::from_coeffs(std::move(c));
}

}  // namespace detail

/// Full factorization over Q: square-free split, then degree-bounded
/// irreducibility searches on each square-free part. Factors returned monic,
/// sorted, with certification flags; the product over factor^multiplicity
/// reproduces p up to its leading coefficient.
inline std::vector<IrreducibleFactor> rational_irreducible_factors(const Poly<Rational>& p) {
    if (p.is_zero()) throw input_error("cannot factor the zero polynomial");
    std::vector<IrreducibleFactor> out;
    for (const auto& [part, mult] : squarefree_factors(p)) {
        auto [zp, N] = detail::to_integer_monic(part);
        std::vector<std::pair<detail::ZP, bool>> zfactors;
        detail::factor_squarefree_integer(zp, zfactors);
        for (auto& [zf, proven] : zfactors)
            out.push_back({detail::from_integer_factor(zf, N), mult, proven});
    }
    std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        for (int i = a.factor.degree(); i >= 0; --i) {
            if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
        }
        return false;
    });
    return out;
}

/// Looks for a proper monic factor of a monic square-free polynomial.
/// `exhaustive` reports whether absence of a result certifies irreducibility.
inline std::optional<Poly<Rational>> find_proper_factor(const Poly<Rational>& p, bool& exhaustive) {
    exhaustive = true;
    if (p.degree() <= 1) return std::nullopt;
    auto factors = rational_irreducible_factors(p);
    if (factors.size() == 1 && factors[0].factor.degree() == p.degree()) {
        exhaustive = factors[0].proven;
        return std::nullopt;
    }
    return factors.front().factor;
}

}  // namespace mtorus
