#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qmx/freealg.hpp"
#include "testutil.hpp"

using namespace qmx;
using namespace qmx::testing;

TEST_CASE("generator ordering is row-major") {
    CHECK(cmp_generators(Z(1, 2), Z(2, 1)) == std::strong_ordering::less);  // k<i clause
    CHECK(cmp_generators(Z(1, 1), Z(1, 1)) == std::strong_ordering::equal);
    CHECK(cmp_generators(Z(1, 2), Z(1, 3)) == std::strong_ordering::less);  // k=i, l<j clause
    CHECK(Z(2, 1) > Z(1, 2));
}

TEST_CASE("deg-rlex word comparison") {
    // the displayed chain: Z_43 Z_21 Z_31 < Z_41 Z_23 Z_41 < Z_42 Z_13 Z_34 Z_41
    Word a = W({Z(4, 3), Z(2, 1), Z(3, 1)});
    Word b = W({Z(4, 1), Z(2, 3), Z(4, 1)});
    Word c = W({Z(4, 2), Z(1, 3), Z(3, 4), Z(4, 1)});
    CHECK(cmp_words(a, b) == std::strong_ordering::less);
    CHECK(cmp_words(b, c) == std::strong_ordering::less);  // degree 3 < 4
    CHECK(cmp_words(a, c) == std::strong_ordering::less);

    // rightmost letters decide: Z_12 Z_11 has the smaller last letter
    CHECK(W({Z(1, 2), Z(1, 1)}) < W({Z(1, 1), Z(1, 2)}));

    // the empty word is below everything
    CHECK(Word() < W({Z(1, 1)}));
    CHECK(cmp_words(a, a) == std::strong_ordering::equal);
}

TEST_CASE("deg-rlex is a total order on a full degree slice") {
    // all 16 degree-2 words over n=2: pairwise comparable, antisymmetric,
    // and transitive under sorting
    std::vector<Word> words = all_words_of_degree(2, 2);
    REQUIRE(words.size() == 16);
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i + 1 < words.size(); ++i) CHECK(words[i] < words[i + 1]);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            CHECK(cmp_words(words[i], words[j]) == std::strong_ordering::less);
            CHECK(cmp_words(words[j], words[i]) == std::strong_ordering::greater);
        }
}

TEST_CASE("multiplication compatibility of the ordering") {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 1000) {
        Word u = random_word(rng, 3, 4), v = random_word(rng, 3, 4);
        if (cmp_words(u, v) != std::strong_ordering::less) continue;
        Word w = random_word(rng, 3, 3), r = random_word(rng, 3, 3);
        CHECK(w * u * r < w * v * r);
        ++checked;
    }
}

TEST_CASE("leading word extraction") {
    // f_1112 = Z_11 Z_12 - q Z_12 Z_11
    NCPoly f = NCPoly::monomial(W({Z(1, 1), Z(1, 2)}));
    f -= NCPoly::monomial(W({Z(1, 2), Z(1, 1)}), LaurentPoly::q());
    auto [fw, fc] = leading_word(f);
    CHECK(fw == W({Z(1, 1), Z(1, 2)}));
    CHECK(fc == LaurentPoly::one());

    NCPoly single = NCPoly::monomial(W({Z(2, 1)}), LaurentPoly::constant(Rational(5)));
    auto [sw, sc] = leading_word(single);
    CHECK(sw == W({Z(2, 1)}));
    CHECK(sc == LaurentPoly::constant(Rational(5)));

    // h'_1122 = Z_11 Z_22 - Z_22 Z_11 - (q-q^-1) Z_12 Z_21
    NCPoly h = NCPoly::monomial(W({Z(1, 1), Z(2, 2)}));
    h -= NCPoly::monomial(W({Z(2, 2), Z(1, 1)}));
    h -= NCPoly::monomial(W({Z(1, 2), Z(2, 1)}), LaurentPoly::q_minus_q_inverse());
    CHECK(leading_word(h).first == W({Z(1, 1), Z(2, 2)}));
    CHECK(leading_word(h).second == LaurentPoly::one());

    CHECK_THROWS_AS(leading_word(NCPoly::zero()), std::domain_error);
}

TEST_CASE("free algebra multiplication") {
    NCPoly p = NCPoly::generator(Z(1, 1)) * NCPoly::generator(Z(2, 2));
    CHECK(p == NCPoly::monomial(W({Z(1, 1), Z(2, 2)})));

    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        NCPoly r = random_ncpoly(rng, 2, 3);
        CHECK(NCPoly::one() * r == r);
        CHECK(r * NCPoly::one() == r);
    }

    NCPoly sum = NCPoly::generator(Z(1, 1)) + NCPoly::generator(Z(1, 2));
    NCPoly expanded = sum * NCPoly::generator(Z(2, 1));
    CHECK(expanded == NCPoly::monomial(W({Z(1, 1), Z(2, 1)})) + NCPoly::monomial(W({Z(1, 2), Z(2, 1)})));
}

TEST_CASE("leading word of a product is the product of leading words") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 500; ++k) {
        NCPoly p = random_ncpoly(rng, 3, 3), r = random_ncpoly(rng, 3, 3);
        CHECK((p * r).leading_word() == p.leading_word() * r.leading_word());
    }
}

TEST_CASE("ncpoly basics") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
        NCPoly p = random_ncpoly(rng, 2, 4);
        CHECK((p - p).is_zero());
        CHECK(-(-p) == p);
    }
    NCPoly h = NCPoly::monomial(W({Z(1, 1), Z(2, 2)})) - NCPoly::monomial(W({Z(2, 2), Z(1, 1)})) -
               NCPoly::monomial(W({Z(1, 2), Z(2, 1)}), LaurentPoly::q_minus_q_inverse());
    CHECK(h.degree() == 2);
    CHECK(h.term_count() == 3);
    // leading term first, then strictly descending
    CHECK(h.str() == "Z[1,1]*Z[2,2] - (q - q^-1)*Z[1,2]*Z[2,1] - Z[2,2]*Z[1,1]");
    CHECK(W({Z(1, 1), Z(2, 2)}).str() == "Z[1,1]*Z[2,2]");
    CHECK(Word().str() == "1");
}
