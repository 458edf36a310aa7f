#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qmx/linalg.hpp"
#include "qmx/pbw.hpp"

namespace qmx {

/// Single-index labeling of the generators by descending generator order:
/// z_1 = Z_nn, z_2 = Z_{n,n-1}, ..., z_{n^2} = Z_11. A product
/// z_{i_1}^{a_1} ... z_{i_r}^{a_r} with i_1 < ... < i_r then reads
/// left-to-right in descending generator order, i.e. it is a normal word.
int single_index(Generator g, int n);
Generator generator_at_single_index(int m, int n);

/// A degree-truncated elimination search: does the left ideal generated by
/// `generators` contain a nonzero element supported on powers of the subset
/// U only, up to total degree `degree_bound`?
struct EliminationProblem {
    int n = 0;
    std::vector<NCPoly> generators;  // generate a LEFT ideal; each nonzero
    std::vector<Generator> subset;   // U, strictly increasing in single-index order
    int degree_bound = 0;

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

/// One spanning element of the truncated left ideal: the normal form of
/// m * g for a normal word m and ideal generator g.
struct IdealProduct {
    Word factor;            // the PBW normal word m
    std::size_t gen_index;  // which ideal generator
    NCPoly normal_form;     // NF(m * g), possibly zero
};

/// Normal forms of m*g for every PBW normal word m and generator g with
/// deg(m) + deg(g) <= D. Their span is the degree-<=D component of the left
/// ideal (normal words form a basis and reduction is linear).
std::vector<IdealProduct> truncated_ideal_basis(const EliminationProblem& prob, const RelationSet& S);

/// True iff every word of p uses only generators from the subset. p must be
/// in PBW normal form (every T-word is automatically normal); non-normal
/// input throws.
bool is_in_span_T(const NCPoly& p, std::span<const Generator> subset);

struct EliminationOutcome {
    /// A nonzero element of V(T) ∩ L, when one exists at this degree bound.
    /// Absence is NOT a disproof: the elimination property guarantees
    /// existence at some degree, without a bound.
    std::optional<NCPoly> witness;
    /// witness = sum_k coeff_k * NF(products[k].factor * g_{products[k].gen_index});
    /// retained so membership in L can be re-verified by reconstruction.
    std::vector<std::pair<std::size_t, LaurentPoly>> combination;
    std::vector<IdealProduct> products;
    /// Rank of the truncated ideal space.
    std::size_t explored_dimension = 0;
    /// Advisory: dim of the degree-<=d component of the quotient A/L,
    /// d = 0..degree_bound.
    std::vector<std::size_t> quotient_dims;
};

/// Assemble the truncated ideal matrix over the PBW coordinates (non-T
/// columns first), run exact fraction-free elimination, and return any row
/// supported entirely on T columns as a witness.
EliminationOutcome find_witness(const EliminationProblem& prob, const RelationSet& S,
                                PivotStrategy strategy = PivotStrategy::FirstRow);

/// Re-verify a claimed witness independently: nonzero, T-supported, and equal
/// to the recorded linear combination of the m*g products (membership in L).
bool verify_witness(const EliminationOutcome& outcome, const EliminationProblem& prob,
                    const RelationSet& S);

}  // namespace qmx
