#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqfree/combinatorics.hpp"
#include "sqfree/linalg.hpp"

namespace sqfree {

// Evaluation point, one canonical encoding per coordinate.
using Point = std::vector<Elem>;

// An ordered product A_1 x ... x A_m of duplicate-free subsets of F_q.
// Factor element order is caller-controlled and is part of the value: the
// generator matrices built from it must be reproducible. Sizes are not
// sorted here; only the formula module assumes sorted sizes.
struct CartesianSet {
    FieldPtr field;
    std::vector<std::vector<Elem>> factors;

    int m() const { return static_cast<int>(factors.size()); }
    std::vector<unsigned> sizes() const {
        std::vector<unsigned> out;
        out.reserve(factors.size());
        for (const auto& a : factors) out.push_back(static_cast<unsigned>(a.size()));
        return out;
    }
    bool has_zero(int i) const;
    std::uint64_t point_count() const {
        std::uint64_t n = 1;
        for (const auto& a : factors) n *= a.size();
        return n;
    }
};

CartesianSet make_cartesian(FieldPtr field, std::vector<std::vector<unsigned>> factors);

// Parses the CLI factor grammar: factors separated by ';', elements by ','.
CartesianSet parse_cartesian(const FieldPtr& field, const std::string& text);

// All n_1...n_m grid points, ordered lexicographically by index tuples into
// the factors with the last index fastest.
std::vector<Point> points(const CartesianSet& x);

// An explicit list of evaluation points (used for the punctured affine set
// and the projective frames, which are not Cartesian products).
struct PointSet {
    FieldPtr field;
    int m = 0;
    std::vector<Point> pts;
};

// A code spanned by square-free monomial evaluations. Rows are ordered by
// strictly descending deglex on the monomials; full rank is checked at
// construction.
struct EvaluationCode {
    GfMatrix generator;
    std::vector<SquareFreeExponent> monomials;
    std::vector<Point> points;
    bool homogeneous = true;
    int degree = 0;

    std::size_t length() const { return generator.cols(); }
    std::size_t dimension() const { return generator.rows(); }
};

EvaluationCode build_code(const CartesianSet& x, int d, bool homogeneous);
EvaluationCode build_code(const PointSet& x, int d, bool homogeneous);

// Presets. The affine factor order is 0, 1, xi, xi^2, ...; the torus drops
// the zero. The punctured affine set is the affine grid as a point list with
// the origin removed, order otherwise preserved.
CartesianSet preset_affine(FieldPtr field, int m);
CartesianSet preset_torus(FieldPtr field, int m);
PointSet preset_affine_punctured(const FieldPtr& field, int m);

// Generator of the dual code via the nullspace; dimension n - k.
GfMatrix dual_code(const GfMatrix& generator);
inline GfMatrix dual_code(const EvaluationCode& c) { return dual_code(c.generator); }

}  // namespace sqfree
