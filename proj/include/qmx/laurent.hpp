#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "qmx/rational.hpp"

namespace qmx {

/// Evaluation mode for the quantum parameter: symbolic q, or a fixed
/// nonzero rational value.
class QMode {
public:
    static QMode generic() { return QMode(); }
    static QMode numeric(const Rational& value) {
        if (value.is_zero()) throw std::invalid_argument("QMode: q must be nonzero");
        QMode m;
        m.generic_ = false;
        m.value_ = value;
        return m;
    }

    bool is_generic() const { return generic_; }
    /// Only meaningful in numeric mode.
    const Rational& value() const { return value_; }

    std::string str() const { return generic_ ? "generic" : value_.str(); }
    friend bool operator==(const QMode&, const QMode&) = default;

private:
    QMode() = default;
    bool generic_ = true;
    Rational value_;
};

/// Laurent polynomial in q with rational coefficients: a finite map from
/// integer exponents (possibly negative) to nonzero coefficients. The zero
/// polynomial is the empty map.
class LaurentPoly {
public:
    using Terms = std::map<std::int64_t, Rational>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(Rational(1)); }
    static LaurentPoly constant(const Rational& c) { return term(c, 0); }
    static LaurentPoly q() { return term(Rational(1), 1); }
    static LaurentPoly q_inverse() { return term(Rational(1), -1); }
    static LaurentPoly q_power(std::int64_t k) { return term(Rational(1), k); }
    /// c * q^k
    static LaurentPoly term(const Rational& c, std::int64_t k) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[k] = c;
        return p;
    }
    /// q - q^{-1}, the scalar of the class-(d) relations.
    static LaurentPoly q_minus_q_inverse() {
        LaurentPoly p = q();
        p -= q_inverse();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    /// True when the polynomial is a single term c*q^k (a unit of the ring).
    bool is_monomial() const { return terms_.size() == 1; }

    const Terms& terms() const { return terms_; }
    Rational coeff(std::int64_t k) const;

    std::int64_t min_exp() const;  // pre: nonzero
    std::int64_t max_exp() const;  // pre: nonzero
    /// Coefficient of the highest power of q. Pre: nonzero.
    const Rational& leading_coeff() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    LaurentPoly scaled(const Rational& c) const;
    /// Multiply by q^k (an exponent shift).
    LaurentPoly shifted(std::int64_t k) const;

    /// Generic mode: identity. Numeric mode: the constant polynomial a(value).
    LaurentPoly eval(const QMode& mode) const;

    /// Exact division; throws std::domain_error when the quotient is not a
    /// Laurent polynomial. Always succeeds for monomial divisors.
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    bool operator==(const LaurentPoly&) const = default;

    /// Canonical text form, highest exponent first: "q - q^-1", "(3/2)*q^2",
    /// "2*q - 2*q^-1", "1". Parsed back by the expression grammar.
    std::string str() const;

private:
    Terms terms_;
};

/// gcd of all rational coefficients (zero for the zero polynomial).
Rational laurent_content(const LaurentPoly& p);

}  // namespace qmx
