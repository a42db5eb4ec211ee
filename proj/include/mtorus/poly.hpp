#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mtorus/errors.hpp"

namespace mtorus {

/// Dense univariate polynomial over an exact field K.
/// Coefficients are stored constant-term first; the representation is
/// canonical: no trailing zero coefficients, the zero polynomial is empty.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(int n) { if (n != 0) c_.push_back(K(n)); }
    Poly(const K& constant) { if (!(constant == K(0))) c_.push_back(constant); }

    static Poly from_coeffs(std::vector<K> coeffs) {
        Poly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    /// x^n with unit coefficient.
    static Poly monomial(int n, const K& coeff = K(1)) {
        Poly p;
        if (coeff == K(0)) return p;
        p.c_.assign(static_cast<size_t>(n) + 1, K(0));
        p.c_.back() = coeff;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    /// Coefficient of x^i; zero beyond the stored range.
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    K leading() const {
        if (is_zero()) throw input_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back() == K(1); }
    bool is_constant() const { return c_.size() <= 1; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = r.c_[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const K& s) const {
        Poly r = *this;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(K(1) / leading());
    }

    Poly derivative() const {
        Poly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * K(static_cast<int>(i));
        r.trim();
        return r;
    }

    template <class V>
    V eval(const V& x) const {  // Horner
        V acc = V(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Requires b != 0.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    std::vector<K> rem(a.coeffs());
    const int db = b.degree();
    const K lead_inv = K(1) / b.leading();
    std::vector<K> quot;
    int dr = a.degree();
    if (dr >= db) quot.assign(static_cast<size_t>(dr - db) + 1, K(0));
    while (dr >= db) {
        K f = rem[static_cast<size_t>(dr)] * lead_inv;
        quot[static_cast<size_t>(dr - db)] = f;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] = rem[static_cast<size_t>(dr - db + i)] - f * b.coeff(i);
        while (dr >= 0 && rem[static_cast<size_t>(dr)] == K(0)) --dr;
    }
    rem.resize(static_cast<size_t>(dr + 1));
    return {Poly<K>::from_coeffs(std::move(quot)), Poly<K>::from_coeffs(std::move(rem))};
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) { return divmod(a, b).second; }

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) { return divmod(a, b).first; }

template <class K>
bool divides(const Poly<K>& d, const Poly<K>& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divmod(a, b);
    integrity_check(r.is_zero(), "exact_div: division was not exact");
    return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

template <class K>
struct ExtGcd {
    Poly<K> g, s, t;  // s*a + t*b = g, g monic (or zero)
};

template <class K>
ExtGcd<K> ext_gcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0(1), s1(0), t0(0), t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        K inv = K(1) / r0.leading();
        r0 = r0.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    return {r0, s0, t0};
}

/// Largest e with p^e | a (a != 0, p non-constant).
template <class K>
int valuation(Poly<K> a, const Poly<K>& p) {
    if (a.is_zero() || p.is_constant()) throw input_error("valuation needs a != 0 and deg p >= 1");
    int e = 0;
    for (;;) {
        auto [q, r] = divmod(a, p);
        if (!r.is_zero()) return e;
        a = std::move(q);
        ++e;
    }
}

/// Square-free decomposition by Yun's algorithm (characteristic zero).
/// Returns monic pairwise-coprime square-free factors with multiplicities;
/// their product reproduces p up to the leading coefficient.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_factors(const Poly<K>& p) {
    if (p.is_zero()) throw input_error("squarefree_factors of zero polynomial");
    std::vector<std::pair<Poly<K>, int>> out;
    Poly<K> f = p.monic();
    if (f.is_constant()) return out;
    Poly<K> fp = f.derivative();
    Poly<K> g = gcd(f, fp);
    Poly<K> c = exact_div(f, g);
    Poly<K> d = exact_div(fp, g) - c.derivative();
    for (int i = 1; !c.is_constant(); ++i) {
        Poly<K> a = gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a.monic(), i);
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
    }
    return out;
}

template <class K>
std::string Poly<K>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        K a = coeff(i);
        if (a == K(0)) continue;
        std::ostringstream term;
        term << a;
        std::string as = term.str();
        bool neg = !as.empty() && as[0] == '-';
        if (neg) as = as.substr(1);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        bool unit = (as == "1");
        if (i == 0) os << as;
        else {
            if (!unit) os << as << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) { return os << p.str(); }

}  // namespace mtorus
