#pragma once

// Random well-formed commands for round-trip testing of the command language.

#include <random>

#include "ersurf/cli.hpp"

namespace cmdgen {

using namespace ersurf;
using namespace ersurf::cli;

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    Command command() {
        const CurveGroup g = group();
        pts_ = g.enumerate();
        Command c{body(g), g, coin(), coin() ? 0 : rng_() % 1000000};
        return c;
    }

private:
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }
    GroupElement pt() { return pts_[static_cast<std::size_t>(uniform(0, static_cast<int>(pts_.size()) - 1))]; }

    CurveGroup group() {
        switch (uniform(0, 3)) {
        case 0: return CurveGroup::torus(uniform(1, 15), uniform(1, 15));
        case 1: return CurveGroup::weierstrass(11, 1, 0);
        case 2: return CurveGroup::weierstrass(13, 2, 3);
        default: return CurveGroup::torus(12, 12);
        }
    }

    Divisor divisor(const CurveGroup& g, int max_deg) {
        Divisor d(g);
        const int terms = uniform(0, 4);
        for (int i = 0; i < terms; ++i) d.add(pt(), uniform(-3, 3));
        while (d.degree() > max_deg) d.add(pt(), -1);
        return d;
    }

    SurfaceSpec surface(const CurveGroup& g, int family) {
        if (family == 0) return {SurfaceFamily::Decomposable, divisor(g, 0), std::nullopt};
        if (family == 1) return {SurfaceFamily::Indec0, std::nullopt, std::nullopt};
        return {SurfaceFamily::IndecMinus1, std::nullopt, pt()};
    }

    PointSpec point_for(int family) {
        if (family == 2) return PointSpec::pair(pt(), pt());
        switch (uniform(0, family == 1 ? 1 : 2)) {
        case 0: return PointSpec::on_x0(pt());
        case 1: return PointSpec::generic(pt());
        default: return PointSpec::on_x1(pt());
        }
    }

    Body body(const CurveGroup& g) {
        using K = NagataTarget::Kind;
        const int fam = uniform(0, 2);
        switch (uniform(0, 7)) {
        case 0: return Analyze{surface(g, fam), {uniform(0, 4), divisor(g, 1000)}};
        case 1: return Classify{surface(g, fam), {1, divisor(g, 1000)}};
        case 2: return Elm{surface(g, fam), point_for(fam)};
        case 3: {
            Walk w{surface(g, fam), {}};
            const int n = uniform(0, 5);
            for (int i = 0; i < n; ++i) {
                if (coin()) {
                    w.steps.push_back(point_for(fam));
                } else {
                    w.steps.push_back(RandomStep{static_cast<RandomStep::Kind>(uniform(0, 5)),
                                                 static_cast<RandomStep::Relation>(uniform(0, 2))});
                }
            }
            return w;
        }
        case 4: return Table{uniform(3, 40)};
        case 5: {
            const int k = uniform(0, 5);
            NagataTarget t = k == 5 ? NagataTarget{K::DecHigh, uniform(2, 60)} : NagataTarget{static_cast<K>(k == 3 ? 4 : k), 0};
            if (k == 4) t = {K::IndecMinus1, 0};
            return Nagata{t, coin()};
        }
        case 6: return MinCurves{surface(g, 2), PointSpec::pair(pt(), pt())};
        default: return Ram{surface(g, 2), pt()};
        }
    }

    std::mt19937_64 rng_;
    std::vector<GroupElement> pts_;
};

}  // namespace cmdgen
