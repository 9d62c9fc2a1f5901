#include <doctest.h>

#include <set>

#include "sqfree/formulas.hpp"
#include "sqfree/ghw.hpp"
#include "sqfree/projective.hpp"

using namespace sqfree;

TEST_CASE("representative frames") {
    auto f3 = Field::make(3);
    auto frame = representatives(f3, 1);
    REQUIRE(frame.reps.size() == 4);
    CHECK(frame.reps[0] == Point{0, 1});
    CHECK(frame.reps[1] == Point{1, 0});
    CHECK(frame.reps[2] == Point{1, 1});
    CHECK(frame.reps[3] == Point{1, 2});

    CHECK(representatives(f3, 2).reps.size() == 13);

    auto f2 = Field::make(2);
    auto binary = representatives(f2, 2);
    CHECK(binary.reps.size() == 7);  // all nonzero vectors over F_2
    for (const auto& p : binary.reps) {
        bool nonzero = false;
        for (Elem v : p) nonzero = nonzero || v != 0;
        CHECK(nonzero);
    }
}

TEST_CASE("projective code construction") {
    auto f2 = Field::make(2);
    auto code = build_projective_code(f2, 2, 2);
    CHECK(code.dimension() == 3);
    CHECK(code.length() == 7);
    // ev(x0x1) is the first row (descending deglex) and has weight 2
    std::size_t weight = 0;
    for (std::size_t j = 0; j < code.length(); ++j)
        if (code.generator(0, j) != 0) ++weight;
    CHECK(weight == 2);

    CHECK(build_projective_code(f2, 2, 1).dimension() == 3);

    auto f3 = Field::make(3);
    auto small = build_projective_code(f3, 1, 2);
    REQUIRE(small.dimension() == 1);
    // ev(x0x1) over the frame (0,1),(1,0),(1,1),(1,2)
    CHECK(small.generator == GfMatrix::from_rows(f3, {{0, 0, 1, 2}}));

    CHECK_THROWS_AS(build_projective_code(f2, 2, 4), BadDegree);
}

TEST_CASE("affine order decomposes the punctured affine space") {
    auto f3 = Field::make(3);
    auto pts = affine_order(f3, 1);
    REQUIRE(pts.size() == 8);  // 3^2 - 1
    // first block: the frame; second block: xi * frame with xi = 2
    CHECK(pts[0] == Point{0, 1});
    CHECK(pts[3] == Point{1, 2});
    CHECK(pts[4] == Point{0, 2});
    CHECK(pts[5] == Point{2, 0});
    CHECK(pts[6] == Point{2, 2});
    CHECK(pts[7] == Point{2, 1});

    // blocks partition the punctured affine space
    std::set<Point> seen(pts.begin(), pts.end());
    CHECK(seen.size() == pts.size());
    auto f2 = Field::make(2);
    CHECK(affine_order(f2, 2).size() == 7);

    for (unsigned q : {2u, 3u, 4u}) {
        auto f = Field::make(q);
        for (int m = 1; m <= 2; ++m) {
            auto ordered = affine_order(f, m);
            std::uint64_t full = 1;
            for (int i = 0; i <= m; ++i) full *= q;
            CHECK(ordered.size() + 1 == full);
        }
    }
}

TEST_CASE("tensor relation") {
    auto f2 = Field::make(2);
    CHECK(verify_tensor_relation(f2, 1, 1));
    CHECK(verify_tensor_relation(f2, 2, 2));
    auto f3 = Field::make(3);
    CHECK(verify_tensor_relation(f3, 1, 1));
    CHECK(verify_tensor_relation(f3, 2, 2));
    auto f4 = Field::make(4);
    CHECK(verify_tensor_relation(f4, 1, 2));
}

TEST_CASE("puncturing degenerate coordinates") {
    auto f2 = Field::make(2);
    auto code = build_projective_code(f2, 2, 2);
    auto punctured = puncture_degenerate(code);
    CHECK(punctured.length() == 4);  // 7 - 3 weight-<=1 points
    CHECK(BigInt(punctured.length()) == projective_lengths(2, 2, 2).nondegenerate);

    // degree 1: nothing to remove
    auto flat = build_projective_code(f2, 2, 1);
    CHECK(puncture_degenerate(flat).length() == flat.length());

    // hierarchy unchanged by puncturing
    auto before = weight_hierarchy(code.generator, GhwMethod::ExactSubspace);
    auto after = weight_hierarchy(punctured.generator, GhwMethod::ExactSubspace);
    CHECK(before.values() == after.values());

    // the affine grid code of degree >= 1 loses exactly the origin column
    auto grid = preset_affine(f2, 2);
    auto affine_code = build_code(grid, 1, true);
    auto affine_punctured = puncture_degenerate(affine_code);
    CHECK(affine_punctured.length() == affine_code.length() - 1);
    for (const auto& p : affine_punctured.points) {
        bool nonzero = false;
        for (Elem v : p) nonzero = nonzero || v != 0;
        CHECK(nonzero);
    }
}

TEST_CASE("projective weights match the closed formula and scale to affine") {
    GhwOptions opt;
    for (unsigned q : {2u, 3u}) {
        auto f = Field::make(q);
        for (int m = 1; m <= 2; ++m) {
            for (int d = 1; d <= m + 1; ++d) {
                auto proj = build_projective_code(f, m, d);
                auto punct = build_code(preset_affine_punctured(f, m + 1), d, true);
                auto ph = weight_hierarchy(proj.generator, GhwMethod::ExactSubspace, opt);
                auto ah = weight_hierarchy(punct.generator, GhwMethod::ExactSubspace, opt);
                REQUIRE(ph.records.size() == ah.records.size());
                for (std::size_t i = 0; i < ph.records.size(); ++i) {
                    CHECK(ah.records[i].value == ph.records[i].value * (q - 1));
                    const int r = ph.records[i].r;
                    if (r <= m + 2 - d)
                        CHECK(ph.records[i].value == ghw_formula_projective(q, m, d, r));
                }
            }
        }
    }
}
