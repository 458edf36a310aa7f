#include "qmx/relations.hpp"

#include <sstream>
#include <stdexcept>

namespace qmx {

char class_letter(RelationClass c) {
    switch (c) {
        case RelationClass::A: return 'a';
        case RelationClass::B: return 'b';
        case RelationClass::C: return 'c';
        case RelationClass::D: return 'd';
    }
    throw std::logic_error("bad RelationClass");
}

std::string class_name(RelationClass c) {
    switch (c) {
        case RelationClass::A: return "f";
        case RelationClass::B: return "g";
        case RelationClass::C: return "h";
        case RelationClass::D: return "h'";
    }
    throw std::logic_error("bad RelationClass");
}

std::string Relation::name() const {
    std::ostringstream out;
    out << class_name(cls) << "[";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out << ",";
        out << indices[i];
    }
    out << "]";
    return out.str();
}

namespace {

Word pair_word(Generator u, Generator v) { return Word({u, v}); }

Relation make_relation(RelationClass cls, std::vector<int> idx, NCPoly poly) {
    const auto& [lead, coeff] = poly.leading();
    if (!coeff.is_one()) throw std::logic_error("relation not monic: " + poly.str());
    if (lead.degree() != 2 || !(lead[0] < lead[1]))
        throw std::logic_error("relation leading word is not an ascending pair: " + poly.str());
    return Relation{cls, std::move(idx), std::move(poly), lead};
}

}  // namespace

RelationSet RelationSet::build(int n, const QMode& mode) {
    if (n < 2) throw std::invalid_argument("RelationSet: n must be >= 2");

    LaurentPoly q = LaurentPoly::q().eval(mode);
    LaurentPoly qq = LaurentPoly::q_minus_q_inverse().eval(mode);  // 0 at q = +-1

    RelationSet S;
    S.n_ = n;
    S.mode_ = mode;

    auto Z = [](int i, int j) { return Generator{i, j}; };

    // (a) f_ijik = Z_ij Z_ik - q Z_ik Z_ij, j < k
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                NCPoly p = NCPoly::monomial(pair_word(Z(i, j), Z(i, k)));
                p -= NCPoly::monomial(pair_word(Z(i, k), Z(i, j)), q);
                S.rels_.push_back(make_relation(RelationClass::A, {i, j, k}, std::move(p)));
            }

    // (b) g_ijkj = Z_ij Z_kj - q Z_kj Z_ij, i < k
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            for (int k = i + 1; k <= n; ++k) {
                NCPoly p = NCPoly::monomial(pair_word(Z(i, j), Z(k, j)));
                p -= NCPoly::monomial(pair_word(Z(k, j), Z(i, j)), q);
                S.rels_.push_back(make_relation(RelationClass::B, {i, j, k}, std::move(p)));
            }

    // (c) h_ijst = Z_ij Z_st - Z_st Z_ij, i < s, t < j
    for (int i = 1; i <= n; ++i)
        for (int s = i + 1; s <= n; ++s)
            for (int j = 1; j <= n; ++j)
                for (int t = 1; t < j; ++t) {
                    NCPoly p = NCPoly::monomial(pair_word(Z(i, j), Z(s, t)));
                    p -= NCPoly::monomial(pair_word(Z(s, t), Z(i, j)));
                    S.rels_.push_back(make_relation(RelationClass::C, {i, j, s, t}, std::move(p)));
                }

    // (d) h'_ijst = Z_ij Z_st - Z_st Z_ij - (q-q^-1) Z_it Z_sj, i < s, j < t
    for (int i = 1; i <= n; ++i)
        for (int s = i + 1; s <= n; ++s)
            for (int j = 1; j <= n; ++j)
                for (int t = j + 1; t <= n; ++t) {
                    NCPoly p = NCPoly::monomial(pair_word(Z(i, j), Z(s, t)));
                    p -= NCPoly::monomial(pair_word(Z(s, t), Z(i, j)));
                    p -= NCPoly::monomial(pair_word(Z(i, t), Z(s, j)), qq);
                    S.rels_.push_back(make_relation(RelationClass::D, {i, j, s, t}, std::move(p)));
                }

    S.rebuild_index();

    // Leading words must biject onto the ascending generator pairs.
    std::size_t n2 = static_cast<std::size_t>(n) * n;
    if (S.rels_.size() != n2 * (n2 - 1) / 2)
        throw std::logic_error("RelationSet: wrong relation count");
    return S;
}

void RelationSet::rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < rels_.size(); ++i) {
        auto [it, inserted] = index_.emplace(rels_[i].leading, i);
        if (!inserted)
            throw std::logic_error("RelationSet: duplicate leading word " + rels_[i].leading.str());
    }
}

const Relation* RelationSet::find(const Word& lead) const {
    auto it = index_.find(lead);
    return it == index_.end() ? nullptr : &rels_[it->second];
}

const Relation* RelationSet::find(Generator u, Generator v) const { return find(pair_word(u, v)); }

RelationSet RelationSet::removing(std::size_t index) const {
    if (index >= rels_.size()) throw std::out_of_range("RelationSet::removing");
    RelationSet S;
    S.n_ = n_;
    S.mode_ = mode_;
    S.rels_ = rels_;
    S.rels_.erase(S.rels_.begin() + static_cast<std::ptrdiff_t>(index));
    S.rebuild_index();
    return S;
}

std::optional<RelationClass> classify_pair(Generator u, Generator v) {
    if (u == v) throw std::invalid_argument("classify_pair: equal generators");
    if (!(u < v)) return std::nullopt;  // descending pairs are normal
    if (u.row == v.row) return RelationClass::A;  // same row, u.col < v.col
    if (u.col == v.col) return RelationClass::B;  // same column, u.row < v.row
    return v.col < u.col ? RelationClass::C : RelationClass::D;
}

}  // namespace qmx
