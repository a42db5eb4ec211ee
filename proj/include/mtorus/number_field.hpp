#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mtorus/errors.hpp"
#include "mtorus/factor.hpp"
#include "mtorus/poly.hpp"
#include "mtorus/rational.hpp"

namespace mtorus {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

/// A simple extension Q[x]/(p), p monic and square-free. Irreducibility is
/// screened by degree-bounded factor searches; `proven` records whether the
/// screen was exhaustive for this degree or the descriptor is an assertion.
class NumberField {
public:
    const Poly<Rational>& min_poly() const { return min_poly_; }
    int degree() const { return min_poly_.degree(); }
    bool proven_irreducible() const { return proven_; }

    friend NumberFieldPtr verify_extension(const Poly<Rational>& p);

private:
    NumberField(Poly<Rational> p, bool proven) : min_poly_(std::move(p)), proven_(proven) {}

    Poly<Rational> min_poly_;
    bool proven_;
};

class extension_rejected : public input_error {
public:
    extension_rejected(const std::string& msg, Poly<Rational> w)
        : input_error(msg), witness(std::move(w)) {}
    Poly<Rational> witness;
};

/// Accepts p iff monic, deg >= 1, square-free, and the factor searches find
/// no proper factor. Rejection carries the witness factor.
inline NumberFieldPtr verify_extension(const Poly<Rational>& p) {
    if (p.is_zero() || p.degree() < 1) throw input_error("extension polynomial must have degree >= 1");
    if (!p.is_monic()) throw input_error("extension polynomial must be monic");
    Poly<Rational> g = gcd(p, p.derivative());
    if (g.degree() > 0)
        throw extension_rejected("polynomial is not square-free; repeated factor " + g.str(), g);
    bool exhaustive = true;
    if (auto w = find_proper_factor(p, exhaustive))
        throw extension_rejected("polynomial is reducible; factor " + w->str(), *w);
    struct Access : NumberField {
        Access(Poly<Rational> q, bool pr) : NumberField(std::move(q), pr) {}
    };
    return std::make_shared<Access>(p, exhaustive);
}

inline bool same_field(const NumberFieldPtr& a, const NumberFieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->min_poly() == b->min_poly();
}

/// Element of Q or of a simple extension Q(alpha). A null field pointer marks
/// a plain rational; binary operations lift rationals into the other
/// operand's field, so matrices can mix embedded constants and field elements.
class FieldElem {
public:
    FieldElem() : c_{Rational(0)} {}
    FieldElem(int n) : c_{Rational(n)} {}
    FieldElem(const Rational& r) : c_{r} {}
    FieldElem(NumberFieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        if (!field_) throw input_error("FieldElem: null field");
        if (static_cast<int>(c_.size()) != field_->degree())
            throw input_error("FieldElem: coefficient count must equal the field degree");
    }

    /// The residue class of x, i.e. the adjoined root.
    static FieldElem generator(const NumberFieldPtr& field) {
        std::vector<Rational> c(static_cast<size_t>(field->degree()), Rational(0));
        if (field->degree() == 1) {
            // Q[x]/(x - a): the class of x is the rational a itself.
            return FieldElem(-field->min_poly().coeff(0));
        }
        c[1] = Rational(1);
        return FieldElem(field, std::move(c));
    }

    const NumberFieldPtr& field() const { return field_; }
    bool is_rational() const { return field_ == nullptr; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational as_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) throw input_error("field element is not rational");
        return c_[0];
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    FieldElem operator-() const {
        FieldElem r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        auto [x, y, f] = aligned(a, b);
        for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return make(f, std::move(x));
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        auto [x, y, f] = aligned(a, b);
        if (!f) return FieldElem(x[0] * y[0]);
        Poly<Rational> prod = Poly<Rational>::from_coeffs(std::move(x)) * Poly<Rational>::from_coeffs(std::move(y));
        return reduce(f, prod);
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

    FieldElem& operator+=(const FieldElem& o) { *this = *this + o; return *this; }
    FieldElem& operator-=(const FieldElem& o) { *this = *this - o; return *this; }
    FieldElem& operator*=(const FieldElem& o) { *this = *this * o; return *this; }
    FieldElem& operator/=(const FieldElem& o) { *this = *this / o; return *this; }

    FieldElem inverse() const {
        if (is_zero()) throw input_error("division by zero field element");
        if (!field_) return FieldElem(c_[0].inverse());
        auto eg = ext_gcd(Poly<Rational>::from_coeffs(c_), field_->min_poly());
        if (eg.g.degree() != 0)
            throw input_error("element is a zero divisor; the extension polynomial " +
                              field_->min_poly().str() + " is reducible (factor " + eg.g.str() + ")");
        return reduce(field_, eg.s);  // s*a = 1 mod p after monic normalization (g == 1)
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        auto [x, y, f] = aligned(a, b);
        (void)f;
        return x == y;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::string str() const;

private:
    static FieldElem make(const NumberFieldPtr& f, std::vector<Rational> c) {
        if (!f) return FieldElem(c[0]);
        return FieldElem(f, std::move(c));
    }

    static FieldElem reduce(const NumberFieldPtr& f, const Poly<Rational>& p) {
        Poly<Rational> r = p % f->min_poly();
        std::vector<Rational> c(static_cast<size_t>(f->degree()), Rational(0));
        for (int i = 0; i < f->degree(); ++i) c[static_cast<size_t>(i)] = r.coeff(i);
        return FieldElem(f, std::move(c));
    }

    // Returns coefficient vectors of equal length plus the common field.
    static std::tuple<std::vector<Rational>, std::vector<Rational>, NumberFieldPtr>
    aligned(const FieldElem& a, const FieldElem& b) {
        if (!a.field_ && !b.field_) return {a.c_, b.c_, nullptr};
        NumberFieldPtr f = a.field_ ? a.field_ : b.field_;
        if (a.field_ && b.field_ && !same_field(a.field_, b.field_))
            throw input_error("arithmetic between elements of different fields");
        auto lift = [&](const FieldElem& e) {
            if (e.field_) return e.c_;
            std::vector<Rational> c(static_cast<size_t>(f->degree()), Rational(0));
            c[0] = e.c_[0];
            return c;
        };
        return {lift(a), lift(b), f};
    }

    NumberFieldPtr field_;  // null => element of Q
    std::vector<Rational> c_;
};

inline std::string FieldElem::str() const {
    if (!field_) return c_[0].str();
    return Poly<Rational>::from_coeffs(c_).str("a");
}

inline std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.str(); }

/// Minimal polynomial over Q of an element of a number field: the first
/// linear dependency among 1, e, e^2, ... found by exact elimination.
inline Poly<Rational> min_poly_of(const FieldElem& e) {
    if (e.is_rational()) {
        return Poly<Rational>::from_coeffs({-e.as_rational(), Rational(1)});
    }
    const int d = e.field()->degree();
    // rows: coordinate vectors of e^0..e^k; eliminate to find a dependency
    std::vector<std::vector<Rational>> basis;        // reduced independent rows
    std::vector<std::vector<Rational>> combos;       // expression of each basis row in powers
    FieldElem power(1);
    for (int k = 0; k <= d; ++k) {
        std::vector<Rational> row = power.is_rational()
            ? [&] { std::vector<Rational> r(static_cast<size_t>(d), Rational(0)); r[0] = power.as_rational(); return r; }()
            : power.coeffs();
        std::vector<Rational> combo(static_cast<size_t>(d) + 1, Rational(0));
        combo[static_cast<size_t>(k)] = Rational(1);
        // reduce row against the basis; basis rows keep pairwise distinct leads
        auto lead_of = [](const std::vector<Rational>& r) {
            size_t i = 0;
            while (i < r.size() && r[i].is_zero()) ++i;
            return i;
        };
        for (;;) {
            size_t lead = lead_of(row);
            if (lead == row.size()) break;
            bool hit = false;
            for (size_t b = 0; b < basis.size(); ++b) {
                if (lead_of(basis[b]) != lead) continue;
                Rational f = row[lead] / basis[b][lead];
                for (size_t j = 0; j < row.size(); ++j) row[j] -= f * basis[b][j];
                for (size_t j = 0; j < combo.size(); ++j) combo[j] -= f * combos[b][j];
                hit = true;
                break;
            }
            if (!hit) break;
        }
        if (lead_of(row) == row.size()) {
            combo.resize(static_cast<size_t>(k) + 1);
            return Poly<Rational>::from_coeffs(std::move(combo)).monic();
        }
        basis.push_back(std::move(row));
        combos.push_back(std::move(combo));
        power = power * e;
    }
    throw integrity_error("min_poly_of: no dependency found up to the field degree");
}

}  // namespace mtorus
