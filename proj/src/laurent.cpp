#include "qmx/laurent.hpp"

#include <sstream>

namespace qmx {

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

Rational LaurentPoly::coeff(std::int64_t k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational() : it->second;
}

std::int64_t LaurentPoly::min_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: min_exp of zero");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: max_exp of zero");
    return terms_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coeff() const {
    if (is_zero()) throw std::domain_error("LaurentPoly: leading_coeff of zero");
    return terms_.rbegin()->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            std::int64_t k = ka + kb;
            auto it = r.terms_.find(k);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) r.terms_.emplace(k, c);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::eval(const QMode& mode) const {
    if (mode.is_generic()) return *this;
    Rational acc;
    for (const auto& [k, c] : terms_) acc += c * mode.value().pow(k);
    return constant(acc);
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
    if (is_zero()) return zero();
    if (divisor.is_monomial()) {
        auto [k, c] = *divisor.terms_.begin();
        LaurentPoly r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e - k, v / c);
        return r;
    }
    // Shift both to ordinary polynomials (min exponent 0), long-divide, shift back.
    std::int64_t shift = min_exp() - divisor.min_exp();
    LaurentPoly rem = shifted(-min_exp());
    LaurentPoly div = divisor.shifted(-divisor.min_exp());
    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exp() >= div.max_exp()) {
        LaurentPoly t = term(rem.leading_coeff() / div.leading_coeff(), rem.max_exp() - div.max_exp());
        quot += t;
        rem -= t * div;  // leading terms cancel, max_exp strictly decreases
    }
    if (!rem.is_zero()) throw std::domain_error("LaurentPoly: inexact division");
    return quot.shifted(shift);
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool need_coeff = !mag.is_one() || k == 0;
        if (need_coeff) {
            if (mag.is_integer())
                out << mag.str();
            else
                out << "(" << mag.str() << ")";
        }
        if (k != 0) {
            if (need_coeff) out << "*";
            if (k == 1)
                out << "q";
            else
                out << "q^" << k;
        }
    }
    return out.str();
}

Rational laurent_content(const LaurentPoly& p) {
    Rational g;
    for (const auto& [k, c] : p.terms()) g = rational_gcd(g, c);
    return g;
}

}  // namespace qmx
