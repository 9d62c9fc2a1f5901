#include "sqfree/projective.hpp"

namespace sqfree {

ProjectiveFrame representatives(const FieldPtr& field, int m) {
    if (m < 1) throw BadArgs("need m >= 1");
    if (m + 1 > 64) throw Unsupported("more than 64 homogeneous coordinates");
    const unsigned q = field->q();
    ProjectiveFrame frame;
    frame.field = field;
    frame.m = m;

    // Walk all (m+1)-tuples in lexicographic encoding order (first coordinate
    // most significant) and keep those whose first nonzero entry is 1.
    Point p(m + 1, 0);
    while (true) {
        Elem lead = 0;
        for (Elem v : p)
            if (v != 0) {
                lead = v;
                break;
            }
        if (lead == 1) frame.reps.push_back(p);
        int i = m;
        while (i >= 0 && ++p[i] == q) p[i--] = 0;
        if (i < 0) break;
    }
    return frame;
}

EvaluationCode build_projective_code(const FieldPtr& field, int m, int d) {
    if (d < 1 || d > m + 1) throw BadDegree("projective degree must be in [1, m+1]");
    auto frame = representatives(field, m);
    PointSet pts;
    pts.field = field;
    pts.m = m + 1;
    pts.pts = std::move(frame.reps);
    return build_code(pts, d, true);
}

std::vector<Point> affine_order(const FieldPtr& field, int m) {
    const Field& f = *field;
    auto frame = representatives(field, m);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(frame.reps.size()) * (f.q() - 1));
    Elem scale = 1;
    for (unsigned block = 0; block + 1 < f.q(); ++block) {
        for (const Point& rep : frame.reps) {
            Point p(rep.size());
            for (std::size_t i = 0; i < rep.size(); ++i) p[i] = f.mul(scale, rep[i]);
            out.push_back(std::move(p));
        }
        scale = f.mul(scale, f.xi());
    }
    return out;
}

bool verify_tensor_relation(const FieldPtr& field, int m, int d) {
    const Field& f = *field;
    auto projective = build_projective_code(field, m, d);

    PointSet affine;
    affine.field = field;
    affine.m = m + 1;
    affine.pts = affine_order(field, m);
    auto punctured = build_code(affine, d, true);

    if (projective.dimension() != punctured.dimension()) return false;
    const std::size_t block = projective.length();
    if (punctured.length() != block * (f.q() - 1)) return false;

    for (std::size_t row = 0; row < punctured.dimension(); ++row) {
        for (unsigned b = 0; b + 1 < f.q(); ++b) {
            const Elem factor = f.pow(f.xi(), static_cast<long long>(b) * d);
            for (std::size_t c = 0; c < block; ++c) {
                if (punctured.generator(row, b * block + c) !=
                    f.mul(factor, projective.generator(row, c)))
                    return false;
            }
        }
    }
    return true;
}

EvaluationCode puncture_degenerate(const EvaluationCode& code) {
    std::vector<std::size_t> keep = row_space_support(code.generator);

    EvaluationCode out;
    out.monomials = code.monomials;
    out.homogeneous = code.homogeneous;
    out.degree = code.degree;
    out.generator = GfMatrix(code.generator.field(), code.generator.rows(), keep.size());
    for (std::size_t i = 0; i < code.generator.rows(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out.generator(i, j) = code.generator(i, keep[j]);
    out.points.reserve(keep.size());
    for (std::size_t j : keep) out.points.push_back(code.points[j]);
    return out;
}

}  // namespace sqfree
