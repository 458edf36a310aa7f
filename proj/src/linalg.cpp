#include "qmx/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace qmx {

namespace {

void scale_row_exact(SparseRow& row, const LaurentPoly& unit_divisor) {
    for (auto& [col, entry] : row) entry = entry.divide_exact(unit_divisor);
}

void row_op(SparseRow& target, const LaurentPoly& a, const SparseRow& other, const LaurentPoly& b) {
    // target := a*target - b*other
    for (auto& [col, entry] : target) entry = entry * a;
    for (const auto& [col, entry] : other) {
        LaurentPoly delta = entry * b;
        auto it = target.find(col);
        if (it == target.end()) {
            if (!delta.is_zero()) target.emplace(col, -delta);
        } else {
            it->second -= delta;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

}  // namespace

void normalize_row(SparseRow& row, SparseRow* combination) {
    if (row.empty()) return;
    Rational content;
    std::int64_t shift = std::numeric_limits<std::int64_t>::max();
    for (const auto& [col, entry] : row) {
        content = rational_gcd(content, laurent_content(entry));
        shift = std::min(shift, entry.min_exp());
    }
    if (row.begin()->second.leading_coeff().sign() < 0) content = -content;
    LaurentPoly unit = LaurentPoly::term(content, shift);
    scale_row_exact(row, unit);
    if (combination) scale_row_exact(*combination, unit);
}

EliminationResult fraction_free_eliminate(std::vector<SparseRow> rows, std::size_t num_cols,
                                          PivotStrategy strategy, bool track_combinations) {
    EliminationResult res;
    res.combinations.resize(track_combinations ? rows.size() : 0);
    if (track_combinations)
        for (std::size_t i = 0; i < rows.size(); ++i) res.combinations[i] = {{i, LaurentPoly::one()}};

    std::vector<bool> placed(rows.size(), false);
    for (std::size_t i = 0; i < rows.size(); ++i)
        normalize_row(rows[i], track_combinations ? &res.combinations[i] : nullptr);

    for (std::size_t col = 0; col < num_cols; ++col) {
        // pick the pivot among not-yet-placed rows with a nonzero entry here
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (placed[i] || !rows[i].count(col)) continue;
            if (pivot == rows.size() ||
                (strategy == PivotStrategy::SparsestRow && rows[i].size() < rows[pivot].size()))
                pivot = i;
            if (strategy == PivotStrategy::FirstRow) break;
        }
        if (pivot == rows.size()) continue;

        placed[pivot] = true;
        res.pivots.emplace_back(col, pivot);
        const LaurentPoly& pv = rows[pivot].at(col);

        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (placed[i]) continue;
            auto it = rows[i].find(col);
            if (it == rows[i].end()) continue;
            LaurentPoly rv = it->second;
            row_op(rows[i], pv, rows[pivot], rv);
            if (track_combinations) row_op(res.combinations[i], pv, res.combinations[pivot], rv);
            if (rows[i].count(col)) throw std::logic_error("elimination: pivot column entry survived");
            normalize_row(rows[i], track_combinations ? &res.combinations[i] : nullptr);
        }
    }

    res.rows = std::move(rows);
    return res;
}

std::size_t matrix_rank(std::vector<SparseRow> rows, std::size_t num_cols, PivotStrategy strategy) {
    return fraction_free_eliminate(std::move(rows), num_cols, strategy).rank();
}

}  // namespace qmx
