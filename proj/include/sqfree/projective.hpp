#pragma once

#include <vector>

#include "sqfree/cartesian.hpp"

namespace sqfree {

// One chosen representative per point of the m-dimensional projective space,
// normalized to leading coefficient 1 and ordered lexicographically by
// canonical encodings. A different choice would give a monomially equivalent
// code; this one is deterministic.
struct ProjectiveFrame {
    FieldPtr field;
    int m = 0;
    std::vector<Point> reps;  // (m+1)-tuples, first nonzero entry = 1
};

ProjectiveFrame representatives(const FieldPtr& field, int m);

// The code spanned by the degree-d square-free monomials in x_0..x_m
// evaluated at the frame; length (q^{m+1}-1)/(q-1), dimension C(m+1, d).
EvaluationCode build_projective_code(const FieldPtr& field, int m, int d);

// Points of the punctured affine space A^{m+1} \ {0} in frame-block order:
// the frame, then xi * frame, xi^2 * frame, ... Appending the origin yields
// the whole affine space.
std::vector<Point> affine_order(const FieldPtr& field, int m);

// Checks the Kronecker relation between the punctured-affine and projective
// codes: with points in affine_order, every generator row of the affine code
// must equal (1, xi^d, xi^{2d}, ...) tensor the corresponding projective row,
// and the dimensions must agree. A false return signals a construction bug.
bool verify_tensor_relation(const FieldPtr& field, int m, int d);

// Drops all-zero generator columns (coordinates where every codeword
// vanishes). Weight hierarchies are unchanged; for the projective code of
// degree d this removes exactly the representatives of Hamming weight < d.
EvaluationCode puncture_degenerate(const EvaluationCode& code);

}  // namespace sqfree
