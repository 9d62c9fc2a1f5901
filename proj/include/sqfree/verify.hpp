#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqfree/ghw.hpp"

namespace sqfree {

struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Deterministic xorshift generator so seeded runs reproduce across compilers
// and standard libraries.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Seeded property suites. Each returns one outcome per named check, with
// trial counts in the detail string.

// shadow enumeration == inclusion-exclusion on random sizes and monomial sets
CheckOutcome suite_shadow(std::uint64_t seed, int trials);

// |V_X(M)| == box - |shadow(M)| for random Cartesian sets with 0 in every
// factor, plus the same identity through the explicit point-list path
CheckOutcome suite_bijection(std::uint64_t seed, int trials);

// Wei duality set identity for random codes (n <= 14, k <= 7, q in {2,3})
CheckOutcome suite_duality(std::uint64_t seed, int trials);

// strict monotonicity of exact hierarchies of random small codes
CheckOutcome suite_monotonicity(std::uint64_t seed, int trials);

// generator rank equals the claimed dimension, exhaustively for small grids
CheckOutcome suite_dimensions();

// hierarchy invariance under factor permutation
CheckOutcome suite_permutation(std::uint64_t seed, int trials);

// Kronecker relation between punctured-affine and projective codes
CheckOutcome suite_tensor(const std::vector<unsigned>& qs, int m_max);

// exact search == footprint bound == closed formula on full grids
CheckOutcome suite_sharpness(unsigned q_min, unsigned q_max, int m_min, int m_max,
                             const GhwOptions& opt = {});

std::vector<CheckOutcome> run_suites(const std::vector<std::string>& names, std::uint64_t seed,
                                     int trials, const GhwOptions& opt);

}  // namespace sqfree
