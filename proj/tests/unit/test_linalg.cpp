#include <doctest.h>

#include <set>

#include "sqfree/linalg.hpp"

using namespace sqfree;

namespace {

GfMatrix mat(const FieldPtr& f, const std::vector<std::vector<unsigned>>& rows) {
    return GfMatrix::from_rows(f, rows);
}

std::uint64_t rng_state = 0x243f6a8885a308d3ull;
unsigned rnd(unsigned bound) {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return static_cast<unsigned>(rng_state % bound);
}

GfMatrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c) {
    GfMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rnd(f->q()));
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    auto f2 = Field::make(2);
    auto id = mat(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto rr = rref(id);
    CHECK(rr.mat == id);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});

    auto single = mat(f2, {{1, 1, 1}});
    auto rs = rref(single);
    CHECK(rs.mat == single);
    CHECK(rs.pivots == std::vector<std::size_t>{0});

    auto f3 = Field::make(3);
    CHECK(rank(mat(f3, {{1, 1, 0}, {2, 2, 0}})) == 1);
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
    for (unsigned q : {2u, 3u, 5u}) {
        auto f = Field::make(q);
        for (int t = 0; t < 200; ++t) {
            auto m = random_matrix(f, 1 + rnd(5), 1 + rnd(6));
            auto rr = rref(m);
            auto rr2 = rref(rr.mat);
            CHECK(rr2.mat == rr.mat);
            CHECK(rr2.pivots == rr.pivots);
            CHECK(rank(m) == rank(m.transpose()));
        }
    }
}

TEST_CASE("nullspace basis") {
    auto f2 = Field::make(2);
    auto m = mat(f2, {{1, 1, 1}});
    auto ns = nullspace_basis(m);
    REQUIRE(ns.rows() == 2);
    CHECK(ns == mat(f2, {{1, 1, 0}, {1, 0, 1}}));

    auto id = mat(f2, {{1, 0}, {0, 1}});
    CHECK(nullspace_basis(id).rows() == 0);

    auto f3 = Field::make(3);
    auto z = GfMatrix(f3, 2, 3);
    CHECK(nullspace_basis(z).rows() == 3);
}

TEST_CASE("nullspace annihilates and has complementary rank") {
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = Field::make(q);
        for (int t = 0; t < 100; ++t) {
            auto m = random_matrix(f, 1 + rnd(4), 1 + rnd(6));
            auto ns = nullspace_basis(m);
            CHECK(rank(m) + ns.rows() == m.cols());
            if (ns.rows() > 0) {
                auto prod = m * ns.transpose();
                for (std::size_t i = 0; i < prod.rows(); ++i)
                    for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
                CHECK(rank(ns) == ns.rows());
            }
        }
    }
}

TEST_CASE("row space support") {
    auto f2 = Field::make(2);
    CHECK(row_space_support(mat(f2, {{0, 1, 0, 1}, {0, 0, 1, 1}})) ==
          std::vector<std::size_t>{1, 2, 3});
    CHECK(row_space_support(GfMatrix(f2, 2, 4)).empty());
    auto f3 = Field::make(3);
    CHECK(row_space_support(mat(f3, {{1, 2, 0}})) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("subspace enumeration hits each subspace exactly once") {
    auto f2 = Field::make(2);
    std::vector<GfMatrix> found;
    for_each_subspace(f2, 2, 1, BigInt(1000), [&](const GfMatrix& m) { found.push_back(m); });
    REQUIRE(found.size() == 3);
    CHECK(found[0] == mat(f2, {{1, 0}}));
    CHECK(found[1] == mat(f2, {{1, 1}}));
    CHECK(found[2] == mat(f2, {{0, 1}}));

    auto f3 = Field::make(3);
    std::size_t count = 0;
    for_each_subspace(f3, 3, 3, BigInt(1000), [&](const GfMatrix& m) {
        ++count;
        CHECK(m == mat(f3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    });
    CHECK(count == 1);

    count = 0;
    for_each_subspace(f2, 4, 2, BigInt(1000), [&](const GfMatrix&) { ++count; });
    CHECK(count == 35);

    // distinct row spaces, matching the gaussian binomial, for k <= 4
    for (unsigned q : {2u, 3u}) {
        auto f = Field::make(q);
        for (std::size_t k = 0; k <= 4; ++k) {
            for (std::size_t r = 0; r <= k; ++r) {
                std::set<std::vector<Elem>> seen;
                for_each_subspace(f, k, r, BigInt(100000), [&](const GfMatrix& m) {
                    auto rr = rref(m);
                    CHECK(rr.pivots.size() == r);
                    CHECK(rr.mat == m);  // already canonical
                    seen.insert(m.data());
                });
                CHECK(BigInt(seen.size()) ==
                      gaussian_binomial(static_cast<int>(k), static_cast<int>(r), q));
            }
        }
    }
}

TEST_CASE("subspace cap carries the exact count") {
    auto f3 = Field::make(3);
    try {
        for_each_subspace(f3, 4, 2, BigInt(10), [](const GfMatrix&) {});
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.count == 130);
    }
}

TEST_CASE("matrix product matches manual evaluation") {
    auto f3 = Field::make(3);
    auto a = mat(f3, {{1, 2}, {0, 1}});
    auto b = mat(f3, {{2, 1, 0}, {1, 1, 2}});
    auto c = a * b;
    CHECK(c == mat(f3, {{1, 0, 1}, {1, 1, 2}}));
    CHECK_THROWS_AS((void)(a * mat(Field::make(2), {{1}, {1}})), SpecMismatch);
}
