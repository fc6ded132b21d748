#include <doctest.h>

#include <random>

#include "ersurf/classify.hpp"
#include "ersurf/errors.hpp"
#include "ersurf/linsys.hpp"
#include "oracles.hpp"

using namespace ersurf;

namespace {

const CurveGroup G = CurveGroup::torus(12, 12);

}  // namespace

TEST_CASE("tables for N = 3..12 match the printed pattern rows") {
    for (int n = 3; n <= 12; ++n) {
        const auto rows = emit_table(n);
        const auto want = oracle::table_fixture(n);
        INFO("N = ", n);
        REQUIRE(rows.size() == want.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            INFO("row ", i, " ", tag_name(rows[i].tag));
            CHECK(oracle::matches(want[i], rows[i]));
            CHECK(rows[i].ambient == n);
        }
    }
    CHECK(emit_table(3).size() == 4);
    CHECK(emit_table(4).size() == 3);
    CHECK(emit_table(5).size() == 5);
    CHECK(emit_table(6).size() == 4);
    CHECK(emit_table(7).size() == 6);
}

TEST_CASE("table rendering lists every row") {
    const auto rows = emit_table(5);
    const auto text = render_table(5, rows);
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(rows.size()) + 2);
    for (const auto& r : rows) CHECK(text.find(std::string(singular_name(r.singular_locus))) != std::string::npos);
    CHECK(text.find("P^5") != std::string::npos);
}

TEST_CASE("classification is consistent with the linear system analysis") {
    std::mt19937_64 rng(17);
    const auto all = G.enumerate();
    int classified = 0;
    for (int i = 0; i < 5000; ++i) {
        const auto s = oracle::random_model(G, rng, 7);
        const DivisorClass b(std::uniform_int_distribution<int>(-1, 14)(rng), all[rng() % all.size()]);
        if (!is_bpf(s, {1, b})) {
            try {
                (void)classify_scroll(s, b);
                FAIL("classified a system with base points");
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::NotBasePointFree);
            }
            continue;
        }
        ++classified;
        const auto m = classify_scroll(s, b);
        const SurfaceDivisorClass h{1, b};
        INFO(s.describe(), " b=", b.to_string(), " ", tag_name(m.tag));
        CHECK(m.e == s.invariant_e());
        CHECK(m.b == b.degree());
        CHECK(m.ambient == h0_surface(s, h) - 1);
        CHECK(m.map_degree * m.scroll_degree == intersect(s, h, h));
        CHECK(m.birational == (m.map_degree == 1));
        CHECK(m.speciality == speciality(s, h));
        if (is_very_ample(s, h)) {
            CHECK(m.birational);
            CHECK(m.singular_locus == SingularLocus::Empty);
        }
        if (m.generation && m.generation->correspondence == Correspondence::OneOne)
            CHECK(m.generation->left_degree + m.generation->right_degree == m.scroll_degree + m.generation->united_points);
        if (m.tag == ScrollTag::Cone) CHECK(m.b_minus_e);
    }
    CHECK(classified > 1000);
}

TEST_CASE("cones over elliptic normal curves have speciality one") {
    for (int e = 3; e <= 8; ++e) {
        const auto ecls = DivisorClass(-e, G.element(1, 3));
        const auto m = classify_scroll(SurfaceModel::decomposable(ecls), -ecls);
        CHECK(m.tag == ScrollTag::Cone);
        CHECK(m.speciality == 1);
        CHECK(m.scroll_degree == e);
        CHECK(m.ambient == e);
        CHECK(m.singular_locus == SingularLocus::Vertex);
    }
}

TEST_CASE("non-birational images") {
    const auto prod = classify_scroll(SurfaceModel::product(G), DivisorClass(2, G.zero()));
    CHECK(prod.tag == ScrollTag::DoubleQuadric);
    CHECK(prod.map_degree == 2);
    CHECK_FALSE(prod.generation.has_value());
}

TEST_CASE("Nagata plans reach their targets") {
    using K = NagataTarget::Kind;
    const std::vector<NagataTarget> targets{{K::DecZero, 0}, {K::DecOne, 0}, {K::DecHigh, 2}, {K::DecHigh, 3},
                                            {K::DecHigh, 4}, {K::Indec0, 0}, {K::IndecMinus1, 0}};
    for (const auto& t : targets) {
        const auto plan = nagata_plan(t);
        CHECK(plan.length == static_cast<int>(plan.steps.size()));
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const auto traj = execute_plan(plan, G, seed);
            INFO(t.to_string(), " seed ", seed);
            CHECK(t.matches(traj.models.back()));
        }
    }
    CHECK(nagata_plan({K::DecTrivial, 0}).length == 0);
}

TEST_CASE("plans are as short as possible") {
    using K = NagataTarget::Kind;
    const auto g = CurveGroup::torus(4, 4);
    CHECK(minimality_check({K::DecOne, 0}, 3, g) == 1);
    CHECK(minimality_check({K::DecZero, 0}, 3, g) == 2);
    CHECK(minimality_check({K::Indec0, 0}, 3, g) == 2);
    CHECK(minimality_check({K::IndecMinus1, 0}, 3, g) == 3);
    CHECK(minimality_check({K::DecHigh, 2}, 3, g) == 2);
    CHECK(minimality_check({K::DecHigh, 4}, 3, g) == -1);
    for (const auto& t : std::vector<NagataTarget>{{K::DecOne, 0}, {K::DecZero, 0}, {K::Indec0, 0}, {K::IndecMinus1, 0}, {K::DecHigh, 2}})
        CHECK(minimality_check(t, 3, g) == nagata_plan(t).length);
    try {
        (void)minimality_check({K::DecOne, 0}, 5, g);
        FAIL("depth cap ignored");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionViolated);
    }
}

TEST_CASE("point spec enumeration") {
    const auto g = CurveGroup::torus(3, 3);
    CHECK(all_point_specs(SurfaceModel::product(g)).size() == 27);
    CHECK(all_point_specs(SurfaceModel::indec0(g)).size() == 18);
    CHECK(all_point_specs(SurfaceModel::indec_minus1(g.zero())).size() == 9 * 10 / 2);
}
