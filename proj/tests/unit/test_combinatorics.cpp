#include <doctest.h>

#include <set>

#include "sqfree/combinatorics.hpp"
#include "sqfree/field.hpp"
#include "sqfree/linalg.hpp"

using namespace sqfree;

namespace {

SquareFreeExponent sfe(std::initializer_list<int> bits) {
    std::uint64_t mask = 0;
    int i = 0;
    for (int b : bits) {
        if (b) mask |= std::uint64_t{1} << i;
        ++i;
    }
    return {mask, i};
}

// Brute-force oracle: count distinct row spaces of full-rank r x k matrices
// over F_q by canonicalizing every candidate through its RREF.
std::size_t count_subspaces_brute(int k, int r, unsigned q) {
    auto f = Field::make(q);
    std::size_t total = 1;
    for (int i = 0; i < r * k; ++i) total *= q;
    std::set<std::vector<Elem>> canon;
    for (std::size_t code = 0; code < total; ++code) {
        GfMatrix m(f, r, k);
        std::size_t v = code;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < k; ++j) {
                m(i, j) = static_cast<Elem>(v % q);
                v /= q;
            }
        auto rr = rref(m);
        if (rr.pivots.size() != static_cast<std::size_t>(r)) continue;
        canon.insert(rr.mat.data());
    }
    return canon.size();
}

}  // namespace

TEST_CASE("degree slices come out in descending deglex order") {
    auto s32 = squarefree_of_degree(3, 2);
    REQUIRE(s32.size() == 3);
    CHECK(s32[0] == sfe({1, 1, 0}));
    CHECK(s32[1] == sfe({1, 0, 1}));
    CHECK(s32[2] == sfe({0, 1, 1}));

    auto s30 = squarefree_of_degree(3, 0);
    REQUIRE(s30.size() == 1);
    CHECK(s30[0].mask == 0);

    CHECK(squarefree_up_to_degree(3, 2).size() == 7);

    CHECK_THROWS_AS(squarefree_of_degree(3, -1), BadDegree);
    CHECK_THROWS_AS(squarefree_of_degree(3, 4), BadDegree);
}

TEST_CASE("deglex comparison") {
    CHECK(deglex_compare(sfe({1, 1, 0}), sfe({1, 0, 1})) == std::strong_ordering::greater);
    CHECK(deglex_compare(sfe({0, 1, 1}), sfe({1, 1, 0})) == std::strong_ordering::less);
    CHECK(deglex_compare(sfe({1, 0, 0}), sfe({1, 1, 0})) == std::strong_ordering::less);
    CHECK(deglex_compare(sfe({1, 0}), sfe({1, 0})) == std::strong_ordering::equal);
    CHECK_THROWS_AS(deglex_compare(sfe({1, 0}), sfe({1, 0, 0})), DimensionMismatch);
}

TEST_CASE("deglex is a strict total order on every slice") {
    for (int m = 1; m <= 6; ++m) {
        for (int d = 0; d <= m; ++d) {
            auto slice = squarefree_of_degree(m, d);
            CHECK(slice.size() ==
                  static_cast<std::size_t>(binomial(m, d).convert_to<long long>()));
            for (std::size_t i = 0; i + 1 < slice.size(); ++i)
                CHECK(deglex_compare(slice[i], slice[i + 1]) == std::strong_ordering::greater);
        }
        // transitivity spot check across a whole small slice
        auto all = squarefree_up_to_degree(m, m);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK(deglex_compare(all[i], all[j]) == std::strong_ordering::greater);
    }
}

TEST_CASE("divisibility reduces to support containment") {
    std::vector<unsigned> sizes{3, 2, 4};
    CHECK(divides(sfe({1, 1, 0}), BoxExponent({2, 1, 0}, sizes)));
    CHECK_FALSE(divides(sfe({1, 1, 0}), BoxExponent({2, 0, 3}, sizes)));
    CHECK(divides(sfe({0, 0, 0}), BoxExponent({0, 0, 0}, sizes)));

    CHECK_THROWS_AS(divides(sfe({1, 0}), BoxExponent({0, 0, 0}, sizes)), DimensionMismatch);
    CHECK_THROWS_AS(BoxExponent({3, 0, 0}, sizes), BadArgs);

    // exhaustive agreement with the mask characterization for m <= 5
    for (int m = 1; m <= 5; ++m) {
        std::vector<unsigned> box_sizes(m, 3);
        std::vector<unsigned> beta(m, 0);
        while (true) {
            BoxExponent b(beta, box_sizes);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                SquareFreeExponent a{mask, m};
                CHECK(divides(a, b) == ((mask & ~b.nonzero_mask()) == 0));
            }
            int i = 0;
            while (i < m && ++beta[i] == box_sizes[i]) beta[i++] = 0;
            if (i == m) break;
        }
    }
}

TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(4, 0, 3) == 1);
    CHECK(gaussian_binomial(5, 5, 7) == 1);
    // frozen from the brute-force RREF canonicalization oracle below
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(count_subspaces_brute(4, 2, 3) == 130);

    CHECK_THROWS_AS(gaussian_binomial(3, 4, 2), BadArgs);
    CHECK_THROWS_AS(gaussian_binomial(3, 1, 1), BadArgs);

    for (unsigned q : {2u, 3u}) {
        for (int k = 0; k <= 4; ++k)
            for (int r = 0; r <= k; ++r)
                CHECK(gaussian_binomial(k, r, q) == count_subspaces_brute(k, r, q));
    }
}
