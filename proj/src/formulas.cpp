#include "sqfree/formulas.hpp"

#include <algorithm>

#include "sqfree/combinatorics.hpp"

namespace sqfree {

namespace {

// Sorts ascending and validates the standing assumptions. Sizes are 1-based
// in the formulas; index 0 is padded with the d = 1 convention n_0 = 1.
std::vector<unsigned> sorted_sizes(std::vector<unsigned> sizes, int d, int r, int max_r) {
    if (sizes.empty() || sizes.size() > 64) throw BadArgs("need 1..64 sizes");
    std::sort(sizes.begin(), sizes.end());
    if (sizes.front() < 2) throw BadRange("formulas require every factor size >= 2");
    const int m = static_cast<int>(sizes.size());
    if (d < 1 || d > m) throw BadRange("degree must be in [1, m]");
    if (r < 1 || r > max_r) throw BadRange("subspace dimension outside the proven range");
    return sizes;
}

BigInt pow_big(BigInt base, int exp) {
    BigInt out = 1;
    while (exp-- > 0) out *= base;
    return out;
}

}  // namespace

bool condition_holds(std::vector<unsigned> sizes, int d, int r) {
    const int m = static_cast<int>(sizes.size());
    auto n = sorted_sizes(std::move(sizes), d, r, m + 1 - d);
    if (r <= 2) return true;  // no index pair d <= i < j <= d+r-2 to constrain
    auto at = [&](int i) -> BigInt { return i == 0 ? BigInt(1) : BigInt(n[i - 1]); };
    const BigInt hi = at(d + r - 1), lo = at(d - 1);
    for (int i = d; i < d + r - 2; ++i)
        for (int j = i + 1; j <= d + r - 2; ++j) {
            const BigInt lhs = hi * lo * (at(i) + at(j) - 1);
            const BigInt rhs = (hi + lo - 1) * at(i) * at(j);
            if (lhs > rhs) return false;
        }
    return true;
}

BigInt shadow_lower_bound(std::vector<unsigned> sizes, int d, int r) {
    const int m = static_cast<int>(sizes.size());
    auto n = sorted_sizes(std::move(sizes), d, r, m + 1 - d);
    auto at = [&](int i) { return BigInt(n[i - 1]); };
    BigInt head = 1, tail = 1, mid = 1;
    for (int i = 1; i <= d - 1; ++i) head *= at(i) - 1;
    for (int i = d + r; i <= m; ++i) tail *= at(i);
    for (int i = d; i <= d + r - 1; ++i) mid *= at(i);
    return head * tail * (mid - 1);
}

FormulaValue ghw_formula_homogeneous(std::vector<unsigned> sizes, int d, int r) {
    FormulaValue out;
    out.exact = condition_holds(sizes, d, r);
    out.value = shadow_lower_bound(std::move(sizes), d, r);
    return out;
}

FormulaValue ghw_formula_up_to_degree(std::vector<unsigned> sizes, int d, int r) {
    // Same expression; the tightness argument needs no zero-containment
    // hypothesis for the <= d family.
    return ghw_formula_homogeneous(std::move(sizes), d, r);
}

BigInt ghw_formula_punctured_affine(unsigned q, int m, int d, int r) {
    if (q < 2) throw BadArgs("need q >= 2");
    if (m < 1 || d < 1 || d > m) throw BadRange("degree must be in [1, m]");
    if (r < 1 || r > m + 1 - d) throw BadRange("subspace dimension outside the proven range");
    const BigInt qq = q;
    return pow_big(qq - 1, d - 1) * pow_big(qq, m - d - r + 1) * (pow_big(qq, r) - 1);
}

BigInt ghw_formula_projective(unsigned q, int m, int d, int r) {
    if (q < 2) throw BadArgs("need q >= 2");
    if (m < 1 || d < 1 || d > m + 1) throw BadRange("degree must be in [1, m+1]");
    if (r < 1 || r > m + 2 - d) throw BadRange("subspace dimension outside the proven range");
    const BigInt qq = q;
    BigInt out = pow_big(qq, m - d - r + 2) * (pow_big(qq, r) - 1);
    if (d == 1) return out / (qq - 1);  // exact: q-1 divides q^r - 1
    return out * pow_big(qq - 1, d - 2);
}

ProjectiveLengths projective_lengths(unsigned q, int m, int d) {
    if (q < 2) throw BadArgs("need q >= 2");
    if (m < 1 || d < 1) throw BadRange("need m >= 1 and d >= 1");
    const BigInt qq = q;
    ProjectiveLengths out;
    out.full = (pow_big(qq, m + 1) - 1) / (qq - 1);
    out.nondegenerate = out.full;
    for (int i = 1; i <= d - 1; ++i) out.nondegenerate -= binomial(m + 1, i);
    return out;
}

CodeDimensions code_dimensions(int m, int d) {
    if (m < 1 || d < 0) throw BadRange("need m >= 1 and d >= 0");
    CodeDimensions out;
    out.homogeneous = binomial(m, d);
    out.up_to_degree = 0;
    for (int i = 0; i <= std::min(d, m); ++i) out.up_to_degree += binomial(m, i);
    out.projective = binomial(m + 1, d);
    return out;
}

}  // namespace sqfree
