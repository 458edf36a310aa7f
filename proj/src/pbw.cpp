#include "qmx/pbw.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmx/linalg.hpp"

namespace qmx {

bool is_normal(const Word& w) {
    const auto& ls = w.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
        if (ls[i] < ls[i + 1]) return false;
    return true;
}

PBWWord PBWWord::from_exponents(std::map<Generator, unsigned> exps) {
    PBWWord p;
    for (auto& [g, k] : exps)
        if (k > 0) p.exps_.emplace(g, k);
    return p;
}

std::optional<PBWWord> PBWWord::from_word(const Word& w) {
    if (!is_normal(w)) return std::nullopt;
    std::map<Generator, unsigned> exps;
    for (Generator g : w.letters()) ++exps[g];
    return from_exponents(std::move(exps));
}

unsigned PBWWord::degree() const {
    unsigned d = 0;
    for (const auto& [g, k] : exps_) d += k;
    return d;
}

Word PBWWord::to_word() const {
    std::vector<Generator> ls;
    ls.reserve(degree());
    // descending generator order: Z_nn block first, Z_11 block last
    for (auto it = exps_.rbegin(); it != exps_.rend(); ++it)
        for (unsigned k = 0; k < it->second; ++k) ls.push_back(it->first);
    return Word(std::move(ls));
}

std::vector<PBWWord> enumerate_normal(int n, int d) {
    if (n < 1) throw std::invalid_argument("enumerate_normal: n must be positive");
    if (d < 0) throw std::invalid_argument("enumerate_normal: degree must be >= 0");

    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gens.push_back(Generator{i, j});

    // multisets of size d: choose a weakly descending letter sequence
    std::vector<PBWWord> out;
    std::map<Generator, unsigned> exps;
    auto rec = [&](auto&& self, std::size_t max_index, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(PBWWord::from_exponents(exps));
            return;
        }
        for (std::size_t gi = max_index + 1; gi-- > 0;) {
            ++exps[gens[gi]];
            self(self, gi, remaining - 1);
            if (--exps[gens[gi]] == 0) exps.erase(gens[gi]);
        }
    };
    rec(rec, gens.size() - 1, d);

    std::sort(out.begin(), out.end(),
              [](const PBWWord& a, const PBWWord& b) { return a.to_word() < b.to_word(); });
    return out;
}

mpz_class normal_word_count(int n, int d) {
    if (d < 0) return 0;
    unsigned long n2 = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
    return binomial(n2 + static_cast<unsigned long>(d) - 1, static_cast<unsigned long>(d));
}

std::vector<mpz_class> HilbertData::cumulative() const {
    std::vector<mpz_class> c;
    mpz_class acc = 0;
    for (const auto& d : dims) {
        acc += d;
        c.push_back(acc);
    }
    return c;
}

HilbertData hilbert(int n, int max_degree) {
    if (n < 1) throw std::invalid_argument("hilbert: n must be positive");
    if (max_degree < 0) throw std::invalid_argument("hilbert: max degree must be >= 0");
    HilbertData h;
    h.n = n;
    for (int d = 0; d <= max_degree; ++d) h.dims.push_back(normal_word_count(n, d));
    return h;
}

int gk_dimension_readout(int n, int max_degree) {
    unsigned long n2 = static_cast<unsigned long>(n) * static_cast<unsigned long>(n);
    if (static_cast<unsigned long>(max_degree) < n2 + 1)
        throw std::invalid_argument("gk_dimension_readout: need max degree >= n^2 + 1");

    std::vector<mpz_class> c = hilbert(n, max_degree).cumulative();
    for (int d = 0; d <= max_degree; ++d)
        if (c[static_cast<std::size_t>(d)] != binomial(n2 + static_cast<unsigned long>(d), n2))
            throw std::logic_error("gk_dimension_readout: cumulative dimension disagrees with the "
                                   "closed form at degree " + std::to_string(d));

    // finite differences: a degree-r polynomial has constant nonzero r-th
    // differences and vanishing (r+1)-th differences
    std::vector<mpz_class> diff = c;
    int level = 0;
    while (!diff.empty() && !std::all_of(diff.begin(), diff.end(), [](const mpz_class& v) { return v == 0; })) {
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
        ++level;
    }
    if (diff.empty()) throw std::logic_error("gk_dimension_readout: not enough sample points");
    int degree = level - 1;
    return degree;
}

PatternCheck check_pattern_hypothesis(const RelationSet& S) {
    PatternCheck pc;
    int n = S.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pc.witness_order.push_back(Generator{i, j});

    std::map<Word, std::size_t> leading_count;
    for (const auto& r : S.relations()) ++leading_count[r.leading];

    for (const auto& [w, count] : leading_count) {
        bool ascending_pair = w.degree() == 2 && w[0] < w[1];
        if (!ascending_pair || count != 1) pc.unexpected.push_back(w);
    }
    for (std::size_t a = 0; a < pc.witness_order.size(); ++a)
        for (std::size_t b = a + 1; b < pc.witness_order.size(); ++b) {
            Word w({pc.witness_order[a], pc.witness_order[b]});
            if (!leading_count.count(w)) pc.missing.push_back(w);
        }

    pc.holds = pc.missing.empty() && pc.unexpected.empty();
    return pc;
}

std::size_t bruteforce_graded_dimension(int d, const RelationSet& S) {
    int n = S.n();
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gens.push_back(Generator{i, j});

    // coordinates: normal words of degree d
    std::vector<PBWWord> basis = enumerate_normal(n, d);
    std::map<Word, std::size_t> column;
    for (std::size_t c = 0; c < basis.size(); ++c) column.emplace(basis[c].to_word(), c);

    // all (n^2)^d words of degree d
    std::vector<SparseRow> rows;
    std::vector<std::size_t> digits(static_cast<std::size_t>(d), 0);
    for (;;) {
        std::vector<Generator> ls;
        for (std::size_t k = 0; k < digits.size(); ++k) ls.push_back(gens[digits[k]]);
        NCPoly nf = reduce(NCPoly::monomial(Word(std::move(ls))), S);
        SparseRow row;
        for (const auto& [w, c] : nf.terms()) {
            auto it = column.find(w);
            if (it == column.end()) throw std::logic_error("bruteforce dimension: non-normal word in a normal form");
            row.emplace(it->second, c);
        }
        rows.push_back(std::move(row));

        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == gens.size()) digits[k++] = 0;
        if (k == digits.size()) break;
    }

    return matrix_rank(std::move(rows), basis.size());
}

}  // namespace qmx
