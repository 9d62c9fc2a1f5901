#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/cartesian.hpp"
#include "sqfree/footprint.hpp"
#include "sqfree/linalg.hpp"

namespace sqfree {

enum class GhwMethod { ExactSubspace, ExactSupport, Footprint, Formula, Duality };
const char* method_name(GhwMethod m);

// An r-dimensional subcode witnessing a weight: coefficient rows are taken
// with respect to the generator passed to the search.
struct SubcodeWitness {
    GfMatrix coefficients;
    std::vector<std::size_t> support;
};

struct GhwOptions {
    BigInt subspace_cap = 10'000'000;
    // DFS nodes across all deepening sweeps of one support search.
    std::uint64_t support_node_budget = 4'000'000'000ull;
    // Full-hierarchy support search walks all 2^n column subsets; refuse
    // beyond this many.
    std::uint64_t powerset_budget = std::uint64_t{1} << 26;
    unsigned jobs = 1;
    // 0 disables. When set, a support search that blows the deadline reports
    // its verified lower bound instead of running for hours.
    double time_limit_sec = 0;
};

struct GhwValue {
    std::size_t value = 0;
    GhwMethod method = GhwMethod::ExactSubspace;
    std::optional<SubcodeWitness> witness;
};

// Minimum support size over all r-dimensional subcodes, by enumerating
// coefficient matrices in RREF canonical form. The reported witness is the
// minimizer with the lexicographically smallest flattened coefficient matrix.
// Throws CapExceeded when the subspace count exceeds the cap.
GhwValue ghw_by_subspace_search(const GfMatrix& generator, int r, const GhwOptions& opt = {});

// Independent oracle: d_r = min{ |S| : |S| - rank(H_S) >= r } over column
// subsets S of a parity-check matrix H, searched in increasing size with
// rank-slack pruning. Throws BudgetExceeded (carrying the verified lower
// bound) when the node budget or time limit runs out.
GhwValue ghw_by_support_search(const GfMatrix& generator, int r, const GhwOptions& opt = {});

struct HierarchyRecord {
    int r = 0;
    BigInt value;
    GhwMethod method = GhwMethod::ExactSubspace;
    bool exact = true;  // false for bound-only entries (footprint/formula caveats)
    std::optional<SubcodeWitness> witness;
    std::optional<std::vector<SquareFreeExponent>> monomial_witness;
};

struct WeightHierarchyReport {
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::vector<HierarchyRecord> records;

    std::vector<BigInt> values() const {
        std::vector<BigInt> out;
        out.reserve(records.size());
        for (const auto& rec : records) out.push_back(rec.value);
        return out;
    }
};

// Full weight hierarchy d_1 .. d_k by an exact search method (ExactSubspace,
// ExactSupport, or Duality). Strict monotonicity is asserted before the
// report is returned. The support method walks the whole power set of
// columns once when affordable and falls back to per-r deepening otherwise.
WeightHierarchyReport weight_hierarchy(const GfMatrix& generator, GhwMethod method,
                                       const GhwOptions& opt = {});

// Per-r exact value choosing whichever exact oracle fits the instance
// (subspace search within the cap, support search otherwise).
GhwValue ghw_exact_auto(const GfMatrix& generator, int r, const GhwOptions& opt = {});

// Footprint-bound hierarchy for a Cartesian square-free code; exact for the
// <= d family on any Cartesian set and for the homogeneous family when every
// factor contains zero, otherwise a lower bound (exact=false on records).
WeightHierarchyReport weight_hierarchy_footprint(const CartesianSet& x, int d, bool homogeneous,
                                                 const FootprintOptions& opt = {});

// Closed-formula hierarchy over the proven range r <= m+1-d. `has_zero`
// states whether every factor contains 0 (needed for homogeneous equality).
WeightHierarchyReport weight_hierarchy_formula(const std::vector<unsigned>& sizes, int d,
                                               bool homogeneous, bool has_zero);

// True iff the values are strictly increasing within [1, n].
bool verify_monotonicity(const std::vector<BigInt>& values, std::size_t n);

// Wei's duality: { d_r(C) } = {1..n} \ { n+1-d_r(C_dual) }, checked exactly
// with both hierarchies computed by exact search.
bool verify_wei_duality(const GfMatrix& generator, const GhwOptions& opt = {});

}  // namespace sqfree
