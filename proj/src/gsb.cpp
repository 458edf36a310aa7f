#include "qmx/gsb.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

namespace qmx {

namespace {

// Row conditions, transcribed on the overlap word x y z. Grouped by the class
// pair (class(x,y), class(y,z)); the w1/w2 split follows the case table.
constexpr bool same_row(Generator a, Generator b) { return a.row == b.row; }
constexpr bool same_col(Generator a, Generator b) { return a.col == b.col; }

const std::array<FamilyRow, 16> kRows = {{
    {1, "a^a", "Z_ij Z_ik Z_is", "j<k<s", RelationClass::A, RelationClass::A,
     [](Generator x, Generator y, Generator z) {
         return same_row(x, y) && same_row(y, z) && x.col < y.col && y.col < z.col;
     }},
    {2, "a^b:w1", "Z_ij Z_ik Z_sk", "j<k, i<s", RelationClass::A, RelationClass::B,
     [](Generator x, Generator y, Generator z) {
         return same_row(x, y) && x.col < y.col && y.row < z.row && same_col(y, z);
     }},
    {3, "a^b:w2", "Z_ij Z_kj Z_ks", "i<k, j<s", RelationClass::B, RelationClass::A,
     [](Generator x, Generator y, Generator z) {
         return same_col(x, y) && x.row < y.row && same_row(y, z) && y.col < z.col;
     }},
    {4, "b^b", "Z_ij Z_kj Z_sj", "i<k<s", RelationClass::B, RelationClass::B,
     [](Generator x, Generator y, Generator z) {
         return same_col(x, y) && same_col(y, z) && x.row < y.row && y.row < z.row;
     }},
    {5, "a^c:w1", "Z_ij Z_st Z_sk", "i<s, t<j, t<k", RelationClass::C, RelationClass::A,
     [](Generator x, Generator y, Generator z) {
         return x.row < y.row && y.col < x.col && same_row(y, z) && y.col < z.col;
     }},
    {6, "a^c:w2", "Z_ij Z_ik Z_st", "j<k, i<s, t<k", RelationClass::A, RelationClass::C,
     [](Generator x, Generator y, Generator z) {
         return same_row(x, y) && x.col < y.col && y.row < z.row && z.col < y.col;
     }},
    {7, "c^c", "Z_ij Z_st Z_kl", "i<s<k, l<t<j", RelationClass::C, RelationClass::C,
     [](Generator x, Generator y, Generator z) {
         return x.row < y.row && y.row < z.row && z.col < y.col && y.col < x.col;
     }},
    {8, "b^c:w1", "Z_ij Z_kj Z_st", "i<k<s, t<j", RelationClass::B, RelationClass::C,
     [](Generator x, Generator y, Generator z) {
         return same_col(x, y) && x.row < y.row && y.row < z.row && z.col < y.col;
     }},
    {9, "b^c:w2", "Z_ij Z_st Z_kt", "i<s<k, t<j", RelationClass::C, RelationClass::B,
     [](Generator x, Generator y, Generator z) {
         return x.row < y.row && y.col < x.col && y.row < z.row && same_col(y, z);
     }},
    {10, "a^d:w1", "Z_ij Z_st Z_sk", "i<s, j<t<k", RelationClass::D, RelationClass::A,
     [](Generator x, Generator y, Generator z) {
         return x.row < y.row && x.col < y.col && same_row(y, z) && y.col < z.col;
     }},
    {11, "a^d:w2", "Z_ij Z_ik Z_st", "i<s, j<k<t", RelationClass::A, RelationClass::D,
     [](Generator x, Generator y, Generator z) {
         return same_row(x, y) && x.col < y.col && y.row < z.row && y.col < z.col;
     }},
    {12, "b^d:w1", "Z_ij Z_kj Z_st", "i<k<s, j<t", RelationClass::B, RelationClass::D,
     [](Generator x, Generator y, Generator z) {
         return same_col(x, y) && x.row < y.row && y.row < z.row && y.col < z.col;
     }},
    {13, "b^d:w2", "Z_st Z_ij Z_kj", "s<i<k, t<j", RelationClass::D, RelationClass::B,
     [](Generator x, Generator y, Generator z) {
         return x.row < y.row && x.col < y.col && y.row < z.row && same_col(y, z);
     }},
    {14, "c^d:w1", "Z_ij Z_st Z_kl", "i<s<k, t<j, t<l", RelationClass::C, RelationClass::D,
     [](Generator x, Generator y, Generator z) {
         return x.row < y.row && y.row < z.row && y.col < x.col && y.col < z.col;
     }},
    {15, "c^d:w2", "Z_kl Z_ij Z_st", "k<i<s, t<j, l<j", RelationClass::D, RelationClass::C,
     [](Generator x, Generator y, Generator z) {
         return x.row < y.row && y.row < z.row && x.col < y.col && z.col < y.col;
     }},
    {16, "d^d", "Z_ij Z_st Z_kl", "i<s<k, j<t<l", RelationClass::D, RelationClass::D,
     [](Generator x, Generator y, Generator z) {
         return x.row < y.row && y.row < z.row && x.col < y.col && y.col < z.col;
     }},
}};

}  // namespace

const std::array<FamilyRow, 16>& family_rows() { return kRows; }

const FamilyRow& family_of(const Ambiguity& amb) {
    if (amb.overlap.degree() != 3) throw std::invalid_argument("family_of: overlap must have degree 3");
    const FamilyRow* hit = nullptr;
    for (const auto& row : kRows) {
        if (row.matches(amb.x(), amb.y(), amb.z())) {
            if (hit)
                throw std::logic_error("ambiguity " + amb.overlap.str() + " matches rows " +
                                       std::string(hit->key) + " and " + row.key);
            hit = &row;
        }
    }
    if (!hit) throw std::logic_error("ambiguity " + amb.overlap.str() + " matches no row");
    // The row's structural class pair must agree with the classes of the two
    // overlapping relations.
    if (hit->left_class != amb.left->cls || hit->right_class != amb.right->cls)
        throw std::logic_error("row " + std::string(hit->key) + " disagrees with relation classes for " +
                               amb.overlap.str());
    return *hit;
}

namespace {

constexpr std::size_t kNoPosition = static_cast<std::size_t>(-1);

// Position of an ascending adjacent pair in w that S rewrites, or kNoPosition.
// `from_left` picks the leftmost such position, otherwise the rightmost.
std::size_t reducible_position(const Word& w, const RelationSet& S, bool from_left) {
    const auto& ls = w.letters();
    if (ls.size() < 2) return kNoPosition;
    if (from_left) {
        for (std::size_t i = 0; i + 1 < ls.size(); ++i)
            if (ls[i] < ls[i + 1] && S.find(ls[i], ls[i + 1])) return i;
    } else {
        for (std::size_t i = ls.size() - 1; i-- > 0;)
            if (ls[i] < ls[i + 1] && S.find(ls[i], ls[i + 1])) return i;
    }
    return kNoPosition;
}

}  // namespace

ReduceResult reduce_full(NCPoly p, const RelationSet& S, const ReduceOptions& opts) {
    ReduceResult res;
    std::mt19937_64 rng(opts.seed);

    for (;;) {
        // pick the occurrence to rewrite
        const Word* word = nullptr;
        std::size_t pos = kNoPosition;

        if (opts.strategy == RewriteStrategy::RandomOccurrence) {
            std::vector<std::pair<const Word*, std::size_t>> occurrences;
            for (const auto& [w, c] : p.terms()) {
                const auto& ls = w.letters();
                for (std::size_t i = 0; i + 1 < ls.size(); ++i)
                    if (ls[i] < ls[i + 1] && S.find(ls[i], ls[i + 1])) occurrences.emplace_back(&w, i);
            }
            if (!occurrences.empty()) {
                auto& pick = occurrences[std::uniform_int_distribution<std::size_t>(0, occurrences.size() - 1)(rng)];
                word = pick.first;
                pos = pick.second;
            }
        } else {
            bool from_left = opts.strategy == RewriteStrategy::LargestWordLeftmostPair;
            // largest word first: scan the support in descending deg-rlex
            for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
                std::size_t i = reducible_position(it->first, S, from_left);
                if (i != kNoPosition) {
                    word = &it->first;
                    pos = i;
                    break;
                }
            }
        }

        if (!word) break;  // normal form reached

        Word w = *word;  // copy: the term is about to be erased
        const Relation* rel = S.find(w[pos], w[pos + 1]);
        LaurentPoly coeff = p.coeff(w);

        Word prefix = w.subword(0, pos);
        Word suffix = w.subword(pos + 2, w.degree() - pos - 2);
        NCPoly framed = rel->poly.framed(prefix, suffix);

        // Monomial-ordering compatibility makes the framed leading word equal
        // to w and everything else strictly smaller; a violation would break
        // termination, so it is a hard error.
        if (framed.leading_word() != w)
            throw std::logic_error("reduce: rewrite does not decrease " + w.str());

        p -= framed.scaled(coeff);

        ++res.steps;
        if (opts.keep_trace) res.trace.push_back(TraceStep{w, pos, rel});
    }

    res.normal_form = std::move(p);
    return res;
}

std::vector<Ambiguity> find_ambiguities(const RelationSet& S) {
    // Structural absence of inclusion compositions: no leading word may be a
    // proper subword of another. (All leading words here have degree 2, so a
    // find would falsify the relation table.)
    const auto& rels = S.relations();
    for (const auto& r : rels) {
        for (const auto& other : rels) {
            if (&r == &other) continue;
            const auto& u = r.leading.letters();
            const auto& v = other.leading.letters();
            if (u.size() >= v.size()) continue;
            for (std::size_t off = 0; off + u.size() <= v.size(); ++off)
                if (std::equal(u.begin(), u.end(), v.begin() + off))
                    throw std::logic_error("inclusion composition: " + r.leading.str() + " inside " +
                                           other.leading.str());
        }
    }

    int n = S.n();
    std::vector<Generator> gens;
    gens.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gens.push_back(Generator{i, j});
    // gens is ascending in the generator order (row-major construction)

    std::vector<Ambiguity> ambs;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            for (std::size_t c = b + 1; c < gens.size(); ++c) {
                const Relation* left = S.find(gens[a], gens[b]);
                const Relation* right = S.find(gens[b], gens[c]);
                if (!left || !right)
                    throw std::logic_error("missing relation for ascending pair");  // full set only
                ambs.push_back(Ambiguity{left, right, Word({gens[a], gens[b], gens[c]})});
            }
    return ambs;
}

NCPoly composition(const Ambiguity& amb) {
    if (amb.overlap.degree() != 3 || !amb.left || !amb.right)
        throw std::invalid_argument("composition: malformed ambiguity");
    Word xy = amb.overlap.subword(0, 2);
    Word yz = amb.overlap.subword(1, 2);
    if (amb.left->leading != xy || amb.right->leading != yz)
        throw std::invalid_argument("composition: overlap does not match the relations' leading words");

    NCPoly comp = amb.left->poly.framed(Word(), Word::single(amb.z()));
    comp -= amb.right->poly.framed(Word::single(amb.x()), Word());

    // the two copies of the overlap word cancel (both relations are monic)
    if (!comp.coeff(amb.overlap).is_zero())
        throw std::logic_error("composition: overlap word survived in " + amb.overlap.str());
    if (!comp.is_zero() && !(comp.leading_word() < amb.overlap))
        throw std::logic_error("composition: result not below the overlap word");
    return comp;
}

namespace {

CompositionReport make_report(const Ambiguity& amb, const RelationSet& S, bool keep_trace) {
    CompositionReport rep;
    rep.ambiguity = amb;
    rep.family = family_of(amb).key;
    ReduceOptions opts;
    opts.keep_trace = keep_trace;
    ReduceResult red = reduce_full(composition(amb), S, opts);
    rep.remainder = std::move(red.normal_form);
    rep.trivial = rep.remainder.is_zero();
    rep.steps = red.steps;
    rep.trace = std::move(red.trace);
    return rep;
}

}  // namespace

GsbVerdict verify_gsb(const RelationSet& S, const VerifyOptions& opts) {
    std::vector<Ambiguity> ambs = find_ambiguities(S);

    std::vector<CompositionReport> reports(ambs.size());
    unsigned jobs = std::max(1u, opts.jobs);
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(ambs.size(), 1)));

    if (jobs <= 1) {
        for (std::size_t i = 0; i < ambs.size(); ++i) reports[i] = make_report(ambs[i], S, opts.keep_traces);
    } else {
        // ambiguities are independent given the immutable relation set
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        for (unsigned t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < ambs.size(); i += jobs)
                        reports[i] = make_report(ambs[i], S, opts.keep_traces);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& w : workers) w.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    GsbVerdict verdict;
    verdict.n = S.n();
    verdict.total_ambiguities = reports.size();
    for (auto& rep : reports) {
        ++verdict.family_histogram[rep.family];
        verdict.max_steps = std::max(verdict.max_steps, rep.steps);
        if (!rep.trivial) verdict.failures.push_back(rep);
    }
    if (opts.retain_reports) verdict.reports = std::move(reports);
    return verdict;
}

}  // namespace qmx
