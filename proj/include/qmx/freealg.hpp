#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmx/laurent.hpp"

namespace qmx {

/// One generator Z_ij of the free algebra, indexed by (row, col), 1-based.
/// Total order: Z_kl < Z_ij iff k < i, or k = i and l < j (row-major).
struct Generator {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Generator&, const Generator&) = default;
    std::string str() const { return "Z[" + std::to_string(row) + "," + std::to_string(col) + "]"; }
};

inline std::strong_ordering cmp_generators(Generator a, Generator b) { return a <=> b; }

/// A word in the generators, stored left to right exactly as written:
/// Z_43 Z_21 Z_31 is {(4,3),(2,1),(3,1)}. Degree = length (every generator
/// has degree 1). The empty word is the identity.
///
/// Ordering is deg-rlex: shorter words first; equal-degree words are read
/// from the RIGHTMOST letter leftward, the first difference deciding:
///
///       Z_43 Z_21 [Z_31]
///       Z_41 Z_23 [Z_41]      Z_31 < Z_41, so the top word is smaller,
///                             even though its leftmost letter is larger.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Generator> letters) : letters_(letters) {}
    static Word single(Generator g) { return Word({g}); }

    std::size_t degree() const { return letters_.size(); }
    bool is_empty() const { return letters_.empty(); }
    const std::vector<Generator>& letters() const { return letters_; }
    Generator operator[](std::size_t i) const { return letters_[i]; }
    Generator front() const { return letters_.front(); }
    Generator back() const { return letters_.back(); }

    /// Concatenation.
    friend Word operator*(const Word& a, const Word& b) {
        std::vector<Generator> ls;
        ls.reserve(a.letters_.size() + b.letters_.size());
        ls.insert(ls.end(), a.letters_.begin(), a.letters_.end());
        ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(ls));
    }

    Word subword(std::size_t pos, std::size_t len) const {
        return Word(std::vector<Generator>(letters_.begin() + pos, letters_.begin() + pos + len));
    }

    bool operator==(const Word&) const = default;

    /// "Z[1,1]*Z[2,2]"; the empty word prints as "1".
    std::string str() const;

private:
    std::vector<Generator> letters_;
};

/// deg-rlex: degree first, then right-to-left letter comparison.
std::strong_ordering cmp_words(const Word& a, const Word& b);

inline bool operator<(const Word& a, const Word& b) { return cmp_words(a, b) < 0; }

/// Element of the free associative algebra K<Z>: a finite map from words to
/// nonzero Laurent-polynomial coefficients. Terms are kept in ascending
/// deg-rlex order; canonical iteration for rendering is descending, so the
/// leading word prints first.
class NCPoly {
public:
    using Terms = std::map<Word, LaurentPoly>;

    NCPoly() = default;

    static NCPoly zero() { return NCPoly(); }
    static NCPoly one() { return monomial(Word()); }
    static NCPoly monomial(const Word& w, const LaurentPoly& c = LaurentPoly::one()) {
        NCPoly p;
        if (!c.is_zero()) p.terms_.emplace(w, c);
        return p;
    }
    static NCPoly generator(Generator g) { return monomial(Word::single(g)); }
    static NCPoly scalar(const LaurentPoly& c) { return monomial(Word(), c); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    LaurentPoly coeff(const Word& w) const;

    /// Max word degree over the support. Pre: nonzero.
    std::size_t degree() const;

    /// The deg-rlex-maximal word and its coefficient. Pre: nonzero.
    const std::pair<const Word, LaurentPoly>& leading() const;
    const Word& leading_word() const { return leading().first; }
    const LaurentPoly& leading_coeff() const { return leading().second; }

    NCPoly& add_term(const Word& w, const LaurentPoly& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly operator-() const;

    NCPoly scaled(const LaurentPoly& c) const;
    /// prefix * this * suffix, word concatenation on every term.
    NCPoly framed(const Word& prefix, const Word& suffix) const;

    NCPoly eval(const QMode& mode) const;

    bool operator==(const NCPoly&) const = default;

    /// Terms joined by " + " / " - ", leading term first, e.g.
    /// "Z[2,2]*Z[1,1] + (q - q^-1)*Z[2,1]*Z[1,2]".
    std::string str() const;

private:
    Terms terms_;
};

std::pair<Word, LaurentPoly> leading_word(const NCPoly& p);  // pre: p != 0

}  // namespace qmx
