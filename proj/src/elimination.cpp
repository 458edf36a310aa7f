#include "qmx/elimination.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qmx {

int single_index(Generator g, int n) {
    if (g.row < 1 || g.row > n || g.col < 1 || g.col > n)
        throw std::invalid_argument("single_index: generator out of range");
    int ascending = (g.row - 1) * n + g.col;  // row-major rank, Z_11 = 1
    return n * n - ascending + 1;             // descending rank, Z_nn = 1
}

Generator generator_at_single_index(int m, int n) {
    if (m < 1 || m > n * n) throw std::invalid_argument("generator_at_single_index: out of range");
    int ascending = n * n - m + 1;
    return Generator{(ascending - 1) / n + 1, (ascending - 1) % n + 1};
}

void EliminationProblem::validate() const {
    if (n < 2) throw std::invalid_argument("EliminationProblem: n must be >= 2");
    if (degree_bound < 0) throw std::invalid_argument("EliminationProblem: negative degree bound");
    for (const auto& g : generators)
        if (g.is_zero()) throw std::invalid_argument("EliminationProblem: zero ideal generator");
    if (subset.empty()) throw std::invalid_argument("EliminationProblem: empty subset U");
    for (std::size_t k = 0; k < subset.size(); ++k) {
        int idx = single_index(subset[k], n);  // also range-checks
        if (k > 0 && single_index(subset[k - 1], n) >= idx)
            throw std::invalid_argument(
                "EliminationProblem: subset must be strictly increasing in the single-index order");
    }
}

std::vector<IdealProduct> truncated_ideal_basis(const EliminationProblem& prob, const RelationSet& S) {
    prob.validate();
    if (prob.n != S.n()) throw std::invalid_argument("truncated_ideal_basis: n mismatch");
    for (const auto& g : prob.generators)
        if (static_cast<int>(g.degree()) > prob.degree_bound)
            throw std::invalid_argument("truncated_ideal_basis: degree bound below a generator degree");

    std::vector<IdealProduct> products;
    for (std::size_t gi = 0; gi < prob.generators.size(); ++gi) {
        const NCPoly& g = prob.generators[gi];
        int budget = prob.degree_bound - static_cast<int>(g.degree());
        for (int d = 0; d <= budget; ++d)
            for (const PBWWord& m : enumerate_normal(prob.n, d)) {
                Word factor = m.to_word();
                NCPoly nf = reduce(NCPoly::monomial(factor) * g, S);
                products.push_back(IdealProduct{factor, gi, std::move(nf)});
            }
    }
    return products;
}

bool is_in_span_T(const NCPoly& p, std::span<const Generator> subset) {
    std::set<Generator> allowed(subset.begin(), subset.end());
    for (const auto& [w, c] : p.terms()) {
        if (!is_normal(w)) throw std::invalid_argument("is_in_span_T: input not in normal form");
        for (Generator g : w.letters())
            if (!allowed.count(g)) return false;
    }
    return true;
}

namespace {

struct Coordinates {
    std::vector<Word> words;             // column -> word; non-T block first
    std::map<Word, std::size_t> column;  // word -> column
    std::size_t t_block_start = 0;
};

Coordinates make_coordinates(const EliminationProblem& prob) {
    std::set<Generator> allowed(prob.subset.begin(), prob.subset.end());
    std::vector<Word> non_t, t;
    for (int d = 0; d <= prob.degree_bound; ++d)
        for (const PBWWord& m : enumerate_normal(prob.n, d)) {
            Word w = m.to_word();
            bool t_word = std::all_of(w.letters().begin(), w.letters().end(),
                                      [&](Generator g) { return allowed.count(g) > 0; });
            (t_word ? t : non_t).push_back(std::move(w));
        }

    Coordinates coords;
    coords.words = std::move(non_t);
    coords.t_block_start = coords.words.size();
    coords.words.insert(coords.words.end(), t.begin(), t.end());
    for (std::size_t c = 0; c < coords.words.size(); ++c) coords.column.emplace(coords.words[c], c);
    return coords;
}

SparseRow to_row(const NCPoly& p, const Coordinates& coords) {
    SparseRow row;
    for (const auto& [w, c] : p.terms()) {
        auto it = coords.column.find(w);
        if (it == coords.column.end())
            throw std::logic_error("elimination: normal form outside the coordinate range");
        row.emplace(it->second, c);
    }
    return row;
}

NCPoly from_row(const SparseRow& row, const Coordinates& coords) {
    NCPoly p;
    for (const auto& [col, c] : row) p.add_term(coords.words[col], c);
    return p;
}

}  // namespace

EliminationOutcome find_witness(const EliminationProblem& prob, const RelationSet& S,
                                PivotStrategy strategy) {
    EliminationOutcome out;
    out.products = truncated_ideal_basis(prob, S);

    Coordinates coords = make_coordinates(prob);
    std::vector<SparseRow> rows;
    rows.reserve(out.products.size());
    for (const auto& p : out.products) rows.push_back(to_row(p.normal_form, coords));

    EliminationResult elim =
        fraction_free_eliminate(rows, coords.words.size(), strategy, /*track_combinations=*/true);
    out.explored_dimension = elim.rank();

    // Any pivot row whose pivot column lies in the T block has zeros in every
    // non-T column (echelon), i.e. it is a nonzero element of V(T) ∩ L.
    for (const auto& [col, row_index] : elim.pivots) {
        if (col < coords.t_block_start) continue;
        out.witness = from_row(elim.rows[row_index], coords);
        for (const auto& [k, c] : elim.combinations[row_index]) out.combination.emplace_back(k, c);
        break;
    }

    // Advisory quotient growth: dim A_{<=d} minus the rank of the ideal rows
    // of degree <= d.
    for (int d = 0; d <= prob.degree_bound; ++d) {
        std::vector<SparseRow> sub;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (out.products[i].normal_form.is_zero() ||
                static_cast<int>(out.products[i].normal_form.degree()) <= d)
                sub.push_back(rows[i]);
        std::size_t ideal_dim = matrix_rank(std::move(sub), coords.words.size(), strategy);
        std::size_t total = 0;
        for (int e = 0; e <= d; ++e) total += normal_word_count(prob.n, e).get_ui();
        out.quotient_dims.push_back(total - ideal_dim);
    }
    return out;
}

bool verify_witness(const EliminationOutcome& outcome, const EliminationProblem& prob,
                    const RelationSet& S) {
    if (!outcome.witness) return false;
    const NCPoly& w = *outcome.witness;
    if (w.is_zero()) return false;
    if (!is_in_span_T(w, prob.subset)) return false;

    // membership in L: rebuild the recorded combination in the free algebra
    // and reduce it; scalars are central, each m*g lies in L
    NCPoly rebuilt;
    for (const auto& [k, c] : outcome.combination) {
        const IdealProduct& p = outcome.products.at(k);
        rebuilt += (NCPoly::monomial(p.factor) * prob.generators.at(p.gen_index)).scaled(c);
    }
    return reduce(rebuilt, S) == w;
}

}  // namespace qmx
