#pragma once

#include <cstdint>
#include <vector>

#include "sqfree/cartesian.hpp"
#include "sqfree/combinatorics.hpp"

namespace sqfree {

// Shadow of a monomial set N inside the box {0..n_1-1} x ... x {0..n_m-1}:
// the box exponents divisible by some member of N. Two independent ways to
// count it; they must always agree.

// Direct enumeration over the box. Throws BudgetExceeded when the box has
// more than `budget` cells (callers should switch to inclusion-exclusion).
std::uint64_t shadow_size_enum(const std::vector<unsigned>& sizes,
                               const std::vector<SquareFreeExponent>& monomials,
                               std::uint64_t budget = 10'000'000);

// Inclusion-exclusion over nonempty subsets A of N:
//   |shadow| = sum (-1)^{|A|-1} prod_{i in U(A)} (n_i - 1) prod_{i not in U(A)} n_i,
// with U(A) the union of supports. Exact arbitrary-precision result.
BigInt shadow_size_ie(const std::vector<unsigned>& sizes,
                      const std::vector<SquareFreeExponent>& monomials);

struct ShadowReport {
    std::vector<SquareFreeExponent> monomials;
    BigInt shadow_size;
    bool cross_checked = false;  // enumeration ran too and agreed
};

ShadowReport shadow_report(const std::vector<unsigned>& sizes,
                           const std::vector<SquareFreeExponent>& monomials,
                           std::uint64_t enum_budget = 10'000'000);

// Footprint bound for the r-th generalized Hamming weight: the minimum shadow
// size over all r-subsets of the square-free monomial pool of degree d
// (homogeneous) or degree <= d. The witness is the minimizing subset that is
// smallest under lexicographic comparison of sorted deglex ranks.
struct FootprintResult {
    int d = 0;
    int r = 0;
    bool homogeneous = true;
    BigInt value;
    std::vector<SquareFreeExponent> witness;
    std::uint64_t examined = 0;  // candidate subsets whose shadow was evaluated
    bool complete = true;        // false when the search budget ran out
};

struct FootprintOptions {
    std::uint64_t subset_budget = 20'000'000;
    unsigned jobs = 1;
};

FootprintResult footprint_bound(const std::vector<unsigned>& sizes, int d, int r,
                                bool homogeneous, const FootprintOptions& opt = {});

// Number of points of X at which every monomial of M vanishes.
std::uint64_t vanishing_count(const CartesianSet& x,
                              const std::vector<SquareFreeExponent>& monomials);
std::uint64_t vanishing_count(const std::vector<Point>& pts,
                              const std::vector<SquareFreeExponent>& monomials);

}  // namespace sqfree
