#include "qmx/freealg.hpp"

#include <sstream>
#include <stdexcept>

namespace qmx {

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out << "*";
        out << letters_[i].str();
    }
    return out.str();
}

std::strong_ordering cmp_words(const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    const auto& u = a.letters();
    const auto& v = b.letters();
    for (std::size_t i = u.size(); i-- > 0;) {
        if (auto c = cmp_generators(u[i], v[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

LaurentPoly NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

std::size_t NCPoly::degree() const {
    if (is_zero()) throw std::domain_error("NCPoly: degree of zero");
    // the deg-rlex-maximal word also has maximal degree
    return terms_.rbegin()->first.degree();
}

const std::pair<const Word, LaurentPoly>& NCPoly::leading() const {
    if (is_zero()) throw std::domain_error("NCPoly: leading term of zero");
    return *terms_.rbegin();
}

NCPoly& NCPoly::add_term(const Word& w, const LaurentPoly& c) {
    if (c.is_zero()) return *this;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::scaled(const LaurentPoly& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : terms_) r.add_term(w, v * c);
    return r;
}

NCPoly NCPoly::framed(const Word& prefix, const Word& suffix) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add_term(prefix * w * suffix, c);
    return r;
}

NCPoly NCPoly::eval(const QMode& mode) const {
    if (mode.is_generic()) return *this;
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add_term(w, c.eval(mode));
    return r;
}

std::string NCPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending deg-rlex: leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        const LaurentPoly& c = it->second;

        // Fold the sign into the join when the coefficient's leading
        // q-coefficient is negative, so "-(q - q^-1)" renders as "- (q - q^-1)".
        bool negative = c.leading_coeff().sign() < 0;
        LaurentPoly mag = negative ? -c : c;

        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }

        if (mag.is_one()) {
            out << w.str();
        } else if (mag.is_monomial()) {
            const auto& [k, coef] = *mag.terms().begin();
            std::string part;
            if (!coef.is_one() || k == 0) part += coef.is_integer() ? coef.str() : "(" + coef.str() + ")";
            if (k != 0) {
                if (!part.empty()) part += "*";
                part += (k == 1) ? "q" : "q^" + std::to_string(k);
            }
            out << part;
            if (!w.is_empty()) out << "*" << w.str();
        } else {
            out << "(" << mag.str() << ")";
            if (!w.is_empty()) out << "*" << w.str();
        }
    }
    return out.str();
}

std::pair<Word, LaurentPoly> leading_word(const NCPoly& p) {
    const auto& [w, c] = p.leading();
    return {w, c};
}

}  // namespace qmx
