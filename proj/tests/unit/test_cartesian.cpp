#include <doctest.h>

#include <algorithm>

#include "sqfree/cartesian.hpp"

using namespace sqfree;

TEST_CASE("point order: index tuples, last index fastest") {
    auto f2 = Field::make(2);
    auto x = make_cartesian(f2, {{0, 1}, {0, 1}});
    auto pts = points(x);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == Point{0, 0});
    CHECK(pts[1] == Point{0, 1});
    CHECK(pts[2] == Point{1, 0});
    CHECK(pts[3] == Point{1, 1});

    auto f5 = Field::make(5);
    auto mixed = make_cartesian(f5, {{0, 1}, {0, 1, 2}, {0, 1, 2, 3}});
    CHECK(points(mixed).size() == 24);

    auto f3 = Field::make(3);
    auto torus = make_cartesian(f3, {{1, 2}, {1, 2}});
    auto tp = points(torus);
    REQUIRE(tp.size() == 4);
    CHECK(tp[0] == Point{1, 1});
    CHECK(tp[1] == Point{1, 2});
    CHECK(tp[2] == Point{2, 1});
    CHECK(tp[3] == Point{2, 2});
}

TEST_CASE("factor validation") {
    auto f3 = Field::make(3);
    CHECK_THROWS_AS(make_cartesian(f3, {{0, 0}}), BadArgs);
    CHECK_THROWS_AS(make_cartesian(f3, {{0, 3}}), BadArgs);
    CHECK_THROWS_AS(make_cartesian(f3, {std::vector<unsigned>{}}), BadArgs);

    auto x = parse_cartesian(f3, "0,1;0,1,2");
    CHECK(x.m() == 2);
    CHECK(x.sizes() == std::vector<unsigned>{2, 3});
    CHECK(x.has_zero(0));
    CHECK_THROWS_AS(parse_cartesian(f3, "0,;1"), BadArgs);
    CHECK_THROWS_AS(parse_cartesian(f3, "0,x"), BadArgs);
}

TEST_CASE("build_code evaluates square-free monomials in descending deglex") {
    auto f2 = Field::make(2);
    auto x = make_cartesian(f2, {{0, 1}, {0, 1}});
    auto code = build_code(x, 1, true);
    REQUIRE(code.dimension() == 2);
    REQUIRE(code.length() == 4);
    // rows: ev(x1) then ev(x2) over points (0,0),(0,1),(1,0),(1,1)
    CHECK(code.generator == GfMatrix::from_rows(f2, {{0, 0, 1, 1}, {0, 1, 0, 1}}));

    auto f4 = Field::make(2);
    auto big = make_cartesian(f4, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    CHECK(build_code(big, 2, true).dimension() == 6);

    auto f3 = Field::make(3);
    auto grid3 = preset_affine(f3, 3);
    CHECK(build_code(grid3, 2, false).dimension() == 7);

    CHECK_THROWS_AS(build_code(x, 0, true), BadDegree);
    CHECK_THROWS_AS(build_code(x, 3, true), BadDegree);
    CHECK(build_code(x, 0, false).dimension() == 1);
}

TEST_CASE("generator rank equals the claimed dimension on small grids") {
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = Field::make(q);
        for (int m = 1; m <= 5; ++m) {
            auto grid = preset_affine(f, m);
            for (int d = 1; d <= m; ++d) {
                // build_code throws RankDeficient if the rank check fails
                auto hom = build_code(grid, d, true);
                CHECK(hom.dimension() > 0);
                auto leq = build_code(grid, d, false);
                CHECK(leq.dimension() >= hom.dimension());
            }
        }
    }
}

TEST_CASE("degenerate factors are caught at code construction") {
    auto f2 = Field::make(2);
    auto singleton = make_cartesian(f2, {{1}, {0, 1}});  // constructing the set is fine
    CHECK(singleton.sizes() == std::vector<unsigned>{1, 2});
    CHECK_THROWS_AS(build_code(singleton, 1, true), RankDeficient);
}

TEST_CASE("presets") {
    auto f3 = Field::make(3);
    auto punct = preset_affine_punctured(f3, 2);
    CHECK(punct.pts.size() == 8);
    for (const auto& p : punct.pts)
        CHECK(std::any_of(p.begin(), p.end(), [](Elem v) { return v != 0; }));

    auto torus = preset_torus(f3, 5);
    CHECK(points(torus).size() == 32);

    auto f2 = Field::make(2);
    CHECK(points(preset_affine(f2, 3)).size() == 8);

    // affine factor order is 0, 1, xi, xi^2, ...
    auto f5 = Field::make(5);
    auto grid = preset_affine(f5, 1);
    CHECK(grid.factors[0] == std::vector<Elem>{0, 1, 2, 4, 3});
}

TEST_CASE("dual code dimensions") {
    auto f2 = Field::make(2);
    auto rep = GfMatrix::from_rows(f2, {{1, 1, 1}});
    CHECK(dual_code(rep).rows() == 2);

    auto full = GfMatrix::from_rows(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(dual_code(full).rows() == 0);

    auto x = make_cartesian(f2, {{0, 1}, {0, 1}});
    auto code = build_code(x, 1, true);
    auto dual = dual_code(code);
    CHECK(dual.rows() == 2);
    auto prod = code.generator * dual.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
}
