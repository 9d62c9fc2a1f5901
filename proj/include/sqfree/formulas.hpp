#pragma once

#include <vector>

#include "sqfree/errors.hpp"

namespace sqfree {

// Closed-form generalized Hamming weights for Cartesian square-free codes and
// their punctured-affine/projective relatives, plus the moderate-growth size
// condition under which the bounds are proven tight.
//
// Every function sorts the sizes ascending internally (the formulas assume
// n_1 <= ... <= n_m; the weights themselves are permutation-invariant) and
// rejects sizes below 2. All arithmetic is exact integer arithmetic; the
// growth condition is checked by cross-multiplication, never with fractions.

// The growth condition on sorted sizes:
//   n_{d+r-1} * n_{d-1} * (n_i + n_j - 1) <= (n_{d+r-1} + n_{d-1} - 1) * n_i * n_j
// for every d <= i < j <= d+r-2. Vacuously true when r <= 2. For d = 1 the
// value n_0 is taken to be 1.
bool condition_holds(std::vector<unsigned> sizes, int d, int r);

// Lower bound for the shadow of any r-subset of degree-d square-free
// monomials (assuming the growth condition):
//   prod_{i<d} (n_i - 1) * prod_{i>=d+r} n_i * (prod_{d<=i<d+r} n_i - 1).
BigInt shadow_lower_bound(std::vector<unsigned> sizes, int d, int r);

// Closed-form d_r. The value equals shadow_lower_bound; it is the exact
// weight when the growth condition holds (and, for the homogeneous family,
// when every factor contains 0 -- the caller asserts that hypothesis).
// When the condition fails the value is still a valid lower bound, and the
// result says so instead of throwing.
struct FormulaValue {
    BigInt value;
    bool exact = true;  // false: growth condition failed, lower bound only
};

FormulaValue ghw_formula_homogeneous(std::vector<unsigned> sizes, int d, int r);
FormulaValue ghw_formula_up_to_degree(std::vector<unsigned> sizes, int d, int r);

// d_r for the degree-d square-free code on the affine space minus the origin:
//   (q-1)^{d-1} * q^{m-d-r+1} * (q^r - 1).
BigInt ghw_formula_punctured_affine(unsigned q, int m, int d, int r);

// d_r for the degree-d square-free code on the m-dimensional projective
// space: (q-1)^{d-2} * q^{m-d-r+2} * (q^r - 1), with the d = 1 case computed
// through the exact division (q^r - 1)/(q - 1).
BigInt ghw_formula_projective(unsigned q, int m, int d, int r);

// Length of the projective code, before and after dropping the coordinates
// where every degree-d monomial vanishes (points of Hamming weight < d).
struct ProjectiveLengths {
    BigInt full;
    BigInt nondegenerate;
};
ProjectiveLengths projective_lengths(unsigned q, int m, int d);

// Dimensions of the three code families.
struct CodeDimensions {
    BigInt homogeneous;    // C(m, d)
    BigInt up_to_degree;   // sum_{i<=d} C(m, i)
    BigInt projective;     // C(m+1, d)
};
CodeDimensions code_dimensions(int m, int d);

}  // namespace sqfree
