#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qmx/gsb.hpp"
#include "qmx/rational.hpp"

namespace qmx {

/// A word is normal (irreducible) exactly when no adjacent letter pair
/// ascends: each letter is >= its right neighbour. Normal words are the
/// PBW basis of the quotient.
bool is_normal(const Word& w);

/// A PBW basis word as a multiset of generators. The canonical expansion
/// lists generators in strictly descending order with multiplicities,
/// Z_nn^k first and Z_11^k last.
class PBWWord {
public:
    PBWWord() = default;
    static PBWWord from_exponents(std::map<Generator, unsigned> exps);
    /// Requires a normal word; nullopt otherwise.
    static std::optional<PBWWord> from_word(const Word& w);

    const std::map<Generator, unsigned>& exponents() const { return exps_; }
    unsigned degree() const;
    Word to_word() const;

    bool operator==(const PBWWord&) const = default;

private:
    std::map<Generator, unsigned> exps_;  // nonzero multiplicities only
};

/// All normal words of degree d over the n^2 generators, in ascending
/// deg-rlex order of their expansions. Count: C(n^2 + d - 1, d).
std::vector<PBWWord> enumerate_normal(int n, int d);

/// Number of normal words of degree d (multisets of size d from n^2 letters).
mpz_class normal_word_count(int n, int d);

struct HilbertData {
    int n = 0;
    /// dims[d] = dimension of the degree-d graded component, d = 0..D.
    std::vector<mpz_class> dims;

    std::vector<mpz_class> cumulative() const;
};

/// Graded dimensions of M_q(n) up to degree D; dims[d] = C(n^2 + d - 1, d),
/// the coefficient of the series 1/(1-t)^{n^2}. Independent of q-mode.
HilbertData hilbert(int n, int max_degree);

/// Degree of the cumulative dimension function d -> sum_{e<=d} dim_e,
/// computed by exact finite differences after checking the cumulative values
/// against C(n^2 + d, n^2) at every sampled degree (mismatch throws).
/// Requires max_degree >= n^2 + 1; returns n^2.
int gk_dimension_readout(int n, int max_degree);

struct PatternCheck {
    bool holds = false;
    /// The generator chain under which the leading words are exactly the
    /// ascending pairs (the deg-rlex generator order itself).
    std::vector<Generator> witness_order;
    std::vector<Word> missing;     // ascending pairs not led by any relation
    std::vector<Word> unexpected;  // leading words that are not ascending pairs
};

/// Check that { leading words of S } = { u v : u < v } exactly, the
/// leading-monomial pattern hypothesis behind the structural corollaries.
PatternCheck check_pattern_hypothesis(const RelationSet& S);

/// Brute-force dimension oracle: reduce all (n^2)^d words of degree d and
/// compute the exact rank of their normal forms over the normal-word
/// coordinates. Equals normal_word_count(n, d) when the basis is correct.
std::size_t bruteforce_graded_dimension(int d, const RelationSet& S);

}  // namespace qmx
