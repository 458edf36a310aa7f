#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmx/relations.hpp"

namespace qmx {

/// An overlap ambiguity: a degree-3 word X Y Z where X Y is the leading word
/// of `left` and Y Z the leading word of `right`. Since every leading word is
/// a strictly ascending pair, ambiguities are exactly the strictly ascending
/// generator triples; there are no inclusion ambiguities.
struct Ambiguity {
    const Relation* left = nullptr;
    const Relation* right = nullptr;
    Word overlap;

    Generator x() const { return overlap[0]; }
    Generator y() const { return overlap[1]; }
    Generator z() const { return overlap[2]; }
    std::pair<RelationClass, RelationClass> family() const { return {left->cls, right->cls}; }
};

/// One row of the composition case table: family label, overlap shape and
/// index conditions, plus the executable form of those conditions on an
/// ascending triple. The label orders the two class letters alphabetically
/// (so "(a^b) w2" has its class-b relation on the LEFT); left_class and
/// right_class carry the structural order.
struct FamilyRow {
    int number;                 // 1-based position in the table
    const char* key;            // stable machine key, e.g. "a^b:w1"
    const char* overlap_shape;  // e.g. "Z_ij Z_ik Z_sk"
    const char* conditions;     // e.g. "j<k, i<s"
    RelationClass left_class;   // class of the relation owning the prefix pair
    RelationClass right_class;  // class of the relation owning the suffix pair
    bool (*matches)(Generator x, Generator y, Generator z);
};

/// All 16 rows: one per ordered pair of relation classes of the two
/// overlapping leading words.
const std::array<FamilyRow, 16>& family_rows();

/// Match an ambiguity against the row table by index conditions. Exactly one
/// row must match; anything else throws (it would mean the table is not a
/// partition of the ascending triples).
const FamilyRow& family_of(const Ambiguity& amb);

/// Which reducible occurrence a reduction step rewrites. All strategies
/// produce the same normal form once the basis is confirmed; the default is
/// fixed for reproducible traces.
enum class RewriteStrategy {
    LargestWordLeftmostPair,   // default
    LargestWordRightmostPair,
    RandomOccurrence,
};

struct TraceStep {
    Word from;             // the word that was rewritten
    std::size_t position;  // index of the ascending pair inside it
    const Relation* rel;
};

struct ReduceOptions {
    RewriteStrategy strategy = RewriteStrategy::LargestWordLeftmostPair;
    bool keep_trace = false;
    std::uint64_t seed = 0;  // RandomOccurrence only
};

struct ReduceResult {
    NCPoly normal_form;
    std::size_t steps = 0;
    std::vector<TraceStep> trace;  // filled when keep_trace
};

/// Rewrite until no word contains an adjacent ascending pair with a relation
/// in S. Every step strictly decreases the rewritten word under deg-rlex
/// (checked; violation throws), so this terminates.
ReduceResult reduce_full(NCPoly p, const RelationSet& S, const ReduceOptions& opts = {});

inline NCPoly reduce(const NCPoly& p, const RelationSet& S) { return reduce_full(p, S).normal_form; }

/// All overlap ambiguities of S, in ascending-triple order. Also structurally
/// verifies that no inclusion compositions exist (throws if one is found).
std::vector<Ambiguity> find_ambiguities(const RelationSet& S);

/// The composition (f, g)_w = f * z - x * g for the overlap w = x y z.
/// The two w-terms cancel, so every word of the result is strictly below w.
NCPoly composition(const Ambiguity& amb);

struct CompositionReport {
    Ambiguity ambiguity;
    std::string family;  // row key
    NCPoly remainder;
    bool trivial = false;  // remainder == 0
    std::size_t steps = 0;
    std::vector<TraceStep> trace;
};

struct GsbVerdict {
    int n = 0;
    std::size_t total_ambiguities = 0;
    std::vector<CompositionReport> failures;  // non-trivial remainders
    std::map<std::string, std::size_t> family_histogram;
    std::size_t max_steps = 0;
    std::vector<CompositionReport> reports;  // all reports when retained

    bool confirmed() const { return failures.empty(); }
    std::size_t trivial_count() const { return total_ambiguities - failures.size(); }
};

struct VerifyOptions {
    unsigned jobs = 1;
    bool keep_traces = false;
    bool retain_reports = false;
};

/// Compute and reduce every composition. A non-trivial remainder is reported
/// in the verdict, never thrown.
GsbVerdict verify_gsb(const RelationSet& S, const VerifyOptions& opts = {});

}  // namespace qmx
