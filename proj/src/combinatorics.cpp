#include "sqfree/combinatorics.hpp"

#include <algorithm>

namespace sqfree {

std::string SquareFreeExponent::to_string() const {
    if (mask == 0) return "1";
    std::string out;
    for (int i = 0; i < m; ++i) {
        if (!bit(i)) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
    }
    return out;
}

BoxExponent::BoxExponent(std::vector<unsigned> e, const std::vector<unsigned>& sizes)
    : entries(std::move(e)) {
    if (entries.size() != sizes.size()) throw DimensionMismatch("box entry count vs sizes");
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] >= sizes[i]) throw BadArgs("box entry exceeds factor size");
}

std::strong_ordering deglex_compare(const SquareFreeExponent& a, const SquareFreeExponent& b) {
    if (a.m != b.m) throw DimensionMismatch("deglex on different variable counts");
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (int i = 0; i < a.m; ++i) {
        if (a.bit(i) != b.bit(i)) return a.bit(i) ? std::strong_ordering::greater
                                                  : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

namespace {

// Descending deglex within one degree is ascending lexicographic order of the
// sorted support sets, so plain combination enumeration does the job.
void emit_degree(int m, int d, std::vector<SquareFreeExponent>& out) {
    if (d == 0) {
        out.emplace_back(0, m);
        return;
    }
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << i;
        out.emplace_back(mask, m);
        int i = d - 1;
        while (i >= 0 && idx[i] == m - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<SquareFreeExponent> squarefree_of_degree(int m, int d) {
    if (m < 0 || m > 64) throw Unsupported("variable count out of range [0, 64]");
    if (d < 0 || d > m) throw BadDegree("degree out of range [0, m]");
    std::vector<SquareFreeExponent> out;
    emit_degree(m, d, out);
    return out;
}

std::vector<SquareFreeExponent> squarefree_up_to_degree(int m, int d) {
    if (m < 0 || m > 64) throw Unsupported("variable count out of range [0, 64]");
    if (d < 0 || d > m) throw BadDegree("degree out of range [0, m]");
    std::vector<SquareFreeExponent> out;
    for (int dd = d; dd >= 0; --dd) emit_degree(m, dd, out);
    return out;
}

bool divides(const SquareFreeExponent& a, const BoxExponent& b) {
    if (a.m != b.m()) throw DimensionMismatch("divides on different variable counts");
    return (a.mask & ~b.nonzero_mask()) == 0;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

BigInt gaussian_binomial(int k, int r, unsigned q) {
    if (q < 2) throw BadArgs("gaussian binomial needs q >= 2");
    if (r < 0 || r > k || k < 0) throw BadArgs("gaussian binomial needs 0 <= r <= k");
    BigInt num = 1, den = 1;
    const BigInt qq = q;
    for (int i = 0; i < r; ++i) {
        num *= boost::multiprecision::pow(qq, k - i) - 1;
        den *= boost::multiprecision::pow(qq, i + 1) - 1;
    }
    return num / den;
}

}  // namespace sqfree
