#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qmx/laurent.hpp"

namespace qmx {

/// Sparse row over Laurent-polynomial entries: column index -> nonzero entry.
using SparseRow = std::map<std::size_t, LaurentPoly>;

enum class PivotStrategy {
    FirstRow,     // lowest row index with a nonzero entry in the pivot column
    SparsestRow,  // fewest nonzero entries, ties by lowest row index
};

struct EliminationResult {
    /// Row contents after the sweep. Pivot rows are in echelon position
    /// (zero left of their pivot column); all other rows are zero.
    std::vector<SparseRow> rows;
    /// rows[i] = sum_k combinations[i][k] * input_row_k. Filled when tracked.
    std::vector<SparseRow> combinations;
    /// (pivot column, row index) in the order columns were processed.
    std::vector<std::pair<std::size_t, std::size_t>> pivots;

    std::size_t rank() const { return pivots.size(); }
};

/// Divide a row by its content (rational gcd times the lowest q-power, both
/// units) and fix the sign of its first entry's leading coefficient. Keeps
/// entries primitive during fraction-free elimination. The tracked
/// combination row, when given, is divided by the same unit.
void normalize_row(SparseRow& row, SparseRow* combination = nullptr);

/// Division-free multistep Gaussian elimination over the Laurent ring:
/// columns are processed left to right; each elimination step is
/// new = pivot_entry * row - row_entry * pivot_row, followed by content
/// normalization. Exact throughout; no entry is ever divided by a
/// non-monomial.
EliminationResult fraction_free_eliminate(std::vector<SparseRow> rows, std::size_t num_cols,
                                          PivotStrategy strategy = PivotStrategy::FirstRow,
                                          bool track_combinations = false);

std::size_t matrix_rank(std::vector<SparseRow> rows, std::size_t num_cols,
                        PivotStrategy strategy = PivotStrategy::FirstRow);

}  // namespace qmx
