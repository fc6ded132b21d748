#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "ersurf/errors.hpp"
#include "ersurf/surface.hpp"
#include "oracles.hpp"

using namespace ersurf;

namespace {

const CurveGroup G = CurveGroup::torus(12, 12);

SurfaceDivisorClass random_divisor(std::mt19937_64& rng) {
    const auto all = G.enumerate();
    return {std::uniform_int_distribution<int>(-3, 4)(rng),
            DivisorClass(std::uniform_int_distribution<int>(-6, 8)(rng),
                         all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)])};
}

}  // namespace

TEST_CASE("models normalize and describe") {
    CHECK_THROWS_AS(SurfaceModel::decomposable(DivisorClass(1, G.zero())), Error);
    CHECK(SurfaceModel::product(G).invariant_e() == 0);
    CHECK(SurfaceModel::decomposable(DivisorClass(-2, G.zero())).describe() == "dec((-2, O))");
    CHECK(SurfaceModel::indec0(G).describe() == "ind0");
    CHECK(SurfaceModel::indec_minus1(G.element(1, 0)).describe() == "indm1((1,0))");
    CHECK(SurfaceModel::indec_minus1(G.element(1, 0)).invariant_e() == -1);
    CHECK(SurfaceModel::indec_minus1(G.element(1, 0)).e_class() == DivisorClass(1, G.element(1, 0)));
}

TEST_CASE("intersection form is symmetric bilinear with X0^2 = -e and f^2 = 0") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const auto s = oracle::random_model(G, rng);
        const auto a = random_divisor(rng), b = random_divisor(rng), c = random_divisor(rng);
        CHECK(intersect(s, a, b) == intersect(s, b, a));
        CHECK(intersect(s, a + b, c) == intersect(s, a, c) + intersect(s, b, c));
        CHECK(intersect(s, a, b) == oracle::dot(s, a.m, a.b.degree(), b.m, b.b.degree()));
        const SurfaceDivisorClass x0{1, DivisorClass::trivial(G)};
        const SurfaceDivisorClass f{0, DivisorClass(1, G.zero())};
        CHECK(intersect(s, x0, x0) == -s.invariant_e());
        CHECK(intersect(s, f, f) == 0);
        CHECK(intersect(s, x0, f) == 1);
        const auto k = canonical_class(s);
        CHECK(intersect(s, k, k) == 0);
        CHECK(intersect(s, k, f) == -2);
    }
}

TEST_CASE("adjunction genus equals the gluing recursion") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 2000; ++i) {
        const auto s = oracle::random_model(G, rng);
        auto d = random_divisor(rng);
        if (d.m <= 0) d.m = 1 - d.m;
        CHECK(genus_adjunction(s, d) == oracle::genus_recursive(s, d.m, d.b.degree()));
        const int chi = euler_characteristic(s, d);
        CHECK(2 * chi == intersect(s, d, d - canonical_class(s)));
    }
    CHECK_THROWS_AS(genus_adjunction(SurfaceModel::product(G), {0, DivisorClass(2, G.zero())}), Error);
}

TEST_CASE("tau is a bijection from S^2X onto the points of the e = -1 surface") {
    const auto g6 = CurveGroup::torus(6, 6);
    const auto s = SurfaceModel::indec_minus1(g6.element(1, 2));
    const auto all = g6.enumerate();
    std::set<SurfacePointDescriptor> image;
    std::map<std::pair<std::int64_t, std::int64_t>, int> per_generator;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j) {
            const auto x = tau(s, all[i], all[j]);
            CHECK(x.generator() == all[i] + all[j] - s.p0());
            image.insert(x);
        }
    CHECK(image.size() == 36 * 37 / 2);
    std::size_t total = 0;
    for (const auto& t : all) {
        const auto pts = points_on_generator(s, t);
        total += pts.size();
        for (const auto& x : pts) {
            CHECK(image.count(x) == 1);
            CHECK(x.generator() == t);
            CHECK(min_curves_through(s, x).size() == (x.is_focal() ? 1u : 2u));
        }
    }
    CHECK(total == image.size());
}

TEST_CASE("min curves have self-intersection one and meet once") {
    const auto s = SurfaceModel::indec_minus1(G.element(3, 1));
    const auto all = G.enumerate();
    for (std::size_t i = 0; i < all.size(); i += 7)
        for (std::size_t j = 0; j < all.size(); j += 5) {
            const auto a = MinCurve{all[i]}.divisor_class(s), b = MinCurve{all[j]}.divisor_class(s);
            CHECK(intersect(s, a, b) == 1);
            CHECK(genus_adjunction(s, a) == 1);
        }
}

TEST_CASE("ramification count on the 12 x 12 torus is 4 on 2G - p0 and 0 elsewhere") {
    const auto p0 = G.element(5, 2);
    const auto s = SurfaceModel::indec_minus1(p0);
    int fours = 0;
    for (const auto& t : G.enumerate()) {
        const auto r = ramification_points(s, t);
        CHECK(r == oracle::halvings(G, t + p0));
        const bool even = (t + p0).x() % 2 == 0 && (t + p0).y() % 2 == 0;
        CHECK(r.size() == (even ? 4u : 0u));
        if (even) ++fours;
        for (const auto& q : r) {
            const auto pts = points_on_generator(s, t);
            CHECK(std::count(pts.begin(), pts.end(), tau(s, q, q)) == 1);
        }
    }
    CHECK(fours == 36);
    // Odd cyclic factors leave one halving, which the geometry rules out.
    const auto odd = CurveGroup::torus(5, 5);
    CHECK_THROWS_AS(ramification_points(SurfaceModel::indec_minus1(odd.zero()), odd.zero()), Error);
}

TEST_CASE("renormalizing at R fixes generators and sends D_R to the new minimum curve") {
    const auto s = SurfaceModel::indec_minus1(G.element(1, 1));
    std::mt19937_64 rng(2);
    const auto all = G.enumerate();
    for (int i = 0; i < 300; ++i) {
        const auto r = all[rng() % all.size()];
        const auto ren = renormalize(s, r);
        CHECK(ren.model.p0() == r + r - s.p0());
        const auto x = tau(s, all[rng() % all.size()], all[rng() % all.size()]);
        const auto y = ren.map(x);
        CHECK(y.generator() == x.generator());
        CHECK(y.is_focal() == x.is_focal());
        CHECK(tau(s, r, r).generator() == ren.map(tau(s, r, r)).generator());
        CHECK(ren.map(tau(s, r, r)).q() == ren.model.p0());
    }
}
