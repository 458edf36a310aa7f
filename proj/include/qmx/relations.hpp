#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmx/freealg.hpp"

namespace qmx {

/// The four defining relation families of M_q(n):
///   (a) f_ijik = Z_ij Z_ik - q Z_ik Z_ij                        j < k
///   (b) g_ijkj = Z_ij Z_kj - q Z_kj Z_ij                        i < k
///   (c) h_ijst = Z_ij Z_st - Z_st Z_ij                          i < s, t < j
///   (d) h'_ijst = Z_ij Z_st - Z_st Z_ij - (q-q^-1) Z_it Z_sj    i < s, j < t
enum class RelationClass { A, B, C, D };

char class_letter(RelationClass c);        // 'a'..'d'
std::string class_name(RelationClass c);   // "f", "g", "h", "h'"

/// One defining relation, stored in rewrite orientation: monic, leading term
/// (an ascending generator pair) minus lower terms.
struct Relation {
    RelationClass cls;
    std::vector<int> indices;  // (i,j,k) for classes a/b, (i,j,s,t) for c/d
    NCPoly poly;
    Word leading;  // degree-2 ascending pair, cached from poly

    /// leading word minus poly: what the leading word rewrites to.
    NCPoly lower_terms() const { return NCPoly::monomial(leading) - poly; }
    std::string name() const;  // e.g. "h'[1,1,2,2]"
};

/// The full defining relation set S of M_q(n): one relation per strictly
/// ascending generator pair, C(n^2, 2) in total, indexed by leading word.
class RelationSet {
public:
    /// n >= 2. In numeric q-mode the coefficients are evaluated at the
    /// given q (which may degenerate class-d relations to commutations at
    /// q = +-1; leading words are unaffected, relations stay monic).
    static RelationSet build(int n, const QMode& mode = QMode::generic());

    int n() const { return n_; }
    const QMode& mode() const { return mode_; }
    const std::vector<Relation>& relations() const { return rels_; }
    std::size_t size() const { return rels_.size(); }

    /// Lookup by leading word; nullptr when the word is not a leading word
    /// (i.e. not a strictly ascending generator pair).
    const Relation* find(const Word& lead) const;
    const Relation* find(Generator u, Generator v) const;

    /// Copy with one relation removed; for hypothesis-mutation testing only
    /// (the result deliberately violates the completeness invariant).
    RelationSet removing(std::size_t index) const;

private:
    RelationSet() = default;
    void rebuild_index();

    int n_ = 0;
    QMode mode_ = QMode::generic();
    std::vector<Relation> rels_;
    std::map<Word, std::size_t> index_;
};

/// Classify an ascending generator pair by the relation whose leading word
/// is u*v: same row -> a, same column -> b, row and column both increase -> d,
/// row increases while column decreases -> c. Returns nullopt for descending
/// pairs (normal-word pairs). u == v is rejected: no relation has leading
/// word Z_ij Z_ij.
std::optional<RelationClass> classify_pair(Generator u, Generator v);

}  // namespace qmx
