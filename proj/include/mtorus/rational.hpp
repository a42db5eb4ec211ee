#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "mtorus/errors.hpp"

namespace mtorus {

/// Exact rational scalar backed by GMP. Invariant: canonical form,
/// i.e. gcd(|num|, den) = 1 and den > 0, maintained by every operation.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "n" or "p/q" (optional leading '-'). Rejects zero denominators.
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw input_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw input_error("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    for (char ch : s) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw input_error("bad rational literal: '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw input_error("bad rational literal: '" + s + "'");
    if (sgn(q.get_den()) == 0) throw input_error("zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace mtorus
