#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sqfree/errors.hpp"

namespace sqfree {

// A square-free exponent tuple in {0,1}^m, stored as a bitmask so that
// divisibility tests collapse to single word operations. Bit i set means
// variable x_{i+1} appears.
struct SquareFreeExponent {
    std::uint64_t mask = 0;
    int m = 0;

    SquareFreeExponent() = default;
    SquareFreeExponent(std::uint64_t bits, int vars) : mask(bits), m(vars) {
        if (vars < 0 || vars > 64) throw Unsupported("variable count out of range [0, 64]");
        if (vars < 64 && (bits >> vars) != 0) throw BadArgs("exponent bits exceed variable count");
    }

    int degree() const { return std::popcount(mask); }
    bool bit(int i) const { return (mask >> i) & 1; }

    // Support as ascending 0-based variable indices.
    std::vector<int> support() const {
        std::vector<int> out;
        for (int i = 0; i < m; ++i)
            if (bit(i)) out.push_back(i);
        return out;
    }

    // "1" for the constant, otherwise "x1*x3" style.
    std::string to_string() const;

    friend bool operator==(const SquareFreeExponent&, const SquareFreeExponent&) = default;
};

// An exponent tuple inside the box {0..n_1-1} x ... x {0..n_m-1}.
struct BoxExponent {
    std::vector<unsigned> entries;

    explicit BoxExponent(std::vector<unsigned> e) : entries(std::move(e)) {}

    // Validates the componentwise bound against the factor sizes.
    BoxExponent(std::vector<unsigned> e, const std::vector<unsigned>& sizes);

    int m() const { return static_cast<int>(entries.size()); }

    // Bitmask of coordinates with a nonzero entry.
    std::uint64_t nonzero_mask() const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i] != 0) out |= std::uint64_t{1} << i;
        return out;
    }
};

// Degree-lexicographic comparison: higher total degree wins; at equal degree
// the tuple with the larger entry at the first differing index wins.
std::strong_ordering deglex_compare(const SquareFreeExponent& a, const SquareFreeExponent& b);

// All C(m,d) square-free exponents of degree exactly d, strictly descending
// under deglex_compare. This descending order is the canonical enumeration
// order everywhere in the library.
std::vector<SquareFreeExponent> squarefree_of_degree(int m, int d);

// All exponents of degree at most d, descending under deglex_compare.
std::vector<SquareFreeExponent> squarefree_up_to_degree(int m, int d);

// True iff the monomial of a divides the monomial of b, which for square-free
// a means every supported coordinate of a is nonzero in b.
bool divides(const SquareFreeExponent& a, const BoxExponent& b);

// Exact binomial coefficient.
BigInt binomial(int n, int k);

// Number of r-dimensional subspaces of F_q^k.
BigInt gaussian_binomial(int k, int r, unsigned q);

}  // namespace sqfree
