#include "sqfree/cartesian.hpp"

#include <algorithm>
#include <set>

namespace sqfree {

bool CartesianSet::has_zero(int i) const {
    const auto& a = factors.at(i);
    return std::find(a.begin(), a.end(), 0) != a.end();
}

CartesianSet make_cartesian(FieldPtr field, std::vector<std::vector<unsigned>> factors) {
    if (factors.empty()) throw BadArgs("need at least one factor");
    if (factors.size() > 64) throw Unsupported("more than 64 factors");
    CartesianSet out;
    out.field = std::move(field);
    out.factors.reserve(factors.size());
    for (const auto& a : factors) {
        if (a.empty()) throw BadArgs("empty factor");
        std::set<unsigned> seen;
        std::vector<Elem> enc;
        enc.reserve(a.size());
        for (unsigned v : a) {
            if (v >= out.field->q()) throw BadArgs("factor element out of field range");
            if (!seen.insert(v).second) throw BadArgs("duplicate element in factor");
            enc.push_back(static_cast<Elem>(v));
        }
        out.factors.push_back(std::move(enc));
    }
    return out;
}

CartesianSet parse_cartesian(const FieldPtr& field, const std::string& text) {
    std::vector<std::vector<unsigned>> factors;
    std::vector<unsigned> cur;
    std::string token;
    auto flush_token = [&]() {
        if (token.empty()) throw BadArgs("empty element in factor spec");
        cur.push_back(static_cast<unsigned>(std::stoul(token)));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush_token();
        } else if (ch == ';') {
            flush_token();
            factors.push_back(std::move(cur));
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            token += ch;
        } else if (ch != ' ') {
            throw BadArgs(std::string("unexpected character in factor spec: ") + ch);
        }
    }
    flush_token();
    factors.push_back(std::move(cur));
    return make_cartesian(field, std::move(factors));
}

std::vector<Point> points(const CartesianSet& x) {
    const int m = x.m();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(x.point_count()));
    std::vector<std::size_t> idx(m, 0);
    while (true) {
        Point p(m);
        for (int i = 0; i < m; ++i) p[i] = x.factors[i][idx[i]];
        out.push_back(std::move(p));
        int i = m - 1;
        while (i >= 0 && ++idx[i] == x.factors[i].size()) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

namespace {

EvaluationCode build_at(const FieldPtr& field, std::vector<Point> pts, int m, int d,
                        bool homogeneous) {
    if (homogeneous) {
        if (d < 1 || d > m) throw BadDegree("homogeneous degree must be in [1, m]");
    } else {
        if (d < 0 || d > m) throw BadDegree("degree must be in [0, m]");
    }
    const Field& f = *field;
    auto monos = homogeneous ? squarefree_of_degree(m, d) : squarefree_up_to_degree(m, d);

    GfMatrix gen(field, monos.size(), pts.size());
    for (std::size_t r = 0; r < monos.size(); ++r) {
        const std::uint64_t mask = monos[r].mask;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            Elem v = 1;
            for (int i = 0; i < m && v != 0; ++i)
                if ((mask >> i) & 1) v = f.mul(v, pts[j][i]);
            gen(r, j) = v;
        }
    }
    if (rank(gen) != gen.rows())
        throw RankDeficient(
            "generator rank below monomial count (factors of size 1 break independence)");

    EvaluationCode code;
    code.generator = std::move(gen);
    code.monomials = std::move(monos);
    code.points = std::move(pts);
    code.homogeneous = homogeneous;
    code.degree = d;
    return code;
}

}  // namespace

EvaluationCode build_code(const CartesianSet& x, int d, bool homogeneous) {
    return build_at(x.field, points(x), x.m(), d, homogeneous);
}

EvaluationCode build_code(const PointSet& x, int d, bool homogeneous) {
    return build_at(x.field, x.pts, x.m, d, homogeneous);
}

CartesianSet preset_affine(FieldPtr field, int m) {
    if (m < 1) throw BadPreset("need m >= 1");
    const Field& f = *field;
    std::vector<Elem> factor;
    factor.reserve(f.q());
    factor.push_back(0);
    Elem cur = 1;
    for (unsigned i = 0; i + 1 < f.q(); ++i) {
        factor.push_back(cur);
        cur = f.mul(cur, f.xi());
    }
    CartesianSet out;
    out.field = std::move(field);
    out.factors.assign(m, factor);
    return out;
}

CartesianSet preset_torus(FieldPtr field, int m) {
    if (m < 1) throw BadPreset("need m >= 1");
    const Field& f = *field;
    std::vector<Elem> factor;
    factor.reserve(f.q() - 1);
    Elem cur = 1;
    for (unsigned i = 0; i + 1 < f.q(); ++i) {
        factor.push_back(cur);
        cur = f.mul(cur, f.xi());
    }
    CartesianSet out;
    out.field = std::move(field);
    out.factors.assign(m, factor);
    return out;
}

PointSet preset_affine_punctured(const FieldPtr& field, int m) {
    auto grid = preset_affine(field, m);
    auto pts = points(grid);
    PointSet out;
    out.field = field;
    out.m = m;
    out.pts.reserve(pts.size() - 1);
    for (auto& p : pts) {
        if (std::all_of(p.begin(), p.end(), [](Elem v) { return v == 0; })) continue;
        out.pts.push_back(std::move(p));
    }
    return out;
}

GfMatrix dual_code(const GfMatrix& generator) { return nullspace_basis(generator); }

}  // namespace sqfree
