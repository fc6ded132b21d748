#include "ersurf/elmtrans.hpp"

#include <algorithm>

#include "ersurf/errors.hpp"

namespace ersurf {
namespace {

[[noreturn]] void bad_spec(const SurfaceModel& s, const PointSpec& x) {
    throw Error(ErrorCode::InvalidPointSpec, x.to_string() + " does not describe a point of " + s.describe());
}

ElmResult make(SurfaceModel m, Y0Note note, ElmRule rule, const GroupElement& fiber) {
    DivisorClass e = m.e_class();
    return {std::move(m), e, note, rule, fiber};
}

GroupElement pick(const std::vector<GroupElement>& v, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
}

GroupElement pick_fiber(const std::vector<GroupElement>& all, RandomStep::Relation rel,
                        const std::optional<GroupElement>& prev, std::mt19937_64& rng) {
    using R = RandomStep::Relation;
    if (!prev || rel == R::Any) return pick(all, rng);
    if (rel == R::SameAsPrevious) return *prev;
    std::vector<GroupElement> rest;
    for (const auto& g : all)
        if (!(g == *prev)) rest.push_back(g);
    if (rest.empty()) throw Error(ErrorCode::InvalidPointSpec, "trivial group has no distinct fiber");
    return pick(rest, rng);
}

PointSpec resolve_pair(const SurfaceModel& s, const RandomStep& t, const std::optional<GroupElement>& prev,
                       std::mt19937_64& rng) {
    using K = RandomStep::Kind;
    const CurveGroup& g = s.group();
    const GroupElement p0 = s.p0();
    const auto all = g.enumerate();
    const bool constrained = prev && t.relation != RandomStep::Relation::Any;

    if (t.kind == K::Focal) {
        if (!constrained) {
            const GroupElement q = pick(all, rng);
            return PointSpec::pair(q, q);
        }
        std::vector<GroupElement> fibers;
        for (const auto& f : all) {
            if (t.relation == RandomStep::Relation::SameAsPrevious ? f == *prev : !(f == *prev))
                if (!g.halvings(f + p0).empty()) fibers.push_back(f);
        }
        if (fibers.empty())
            throw Error(ErrorCode::InvalidPointSpec, "no focal point on the requested generator of " + s.describe());
        const GroupElement f = pick(fibers, rng);
        const GroupElement q = pick(g.halvings(f + p0), rng);
        return PointSpec::pair(q, q);
    }

    const GroupElement q = pick(all, rng);
    if (!constrained) {
        GroupElement r = pick(all, rng);
        if (t.kind == K::Generic) {
            std::vector<GroupElement> others;
            for (const auto& x : all)
                if (!(x == q)) others.push_back(x);
            if (others.empty()) throw Error(ErrorCode::InvalidPointSpec, "trivial group has no non-focal pair");
            r = pick(others, rng);
        }
        return PointSpec::pair(q, r);
    }
    const GroupElement f = pick_fiber(all, t.relation, prev, rng);
    std::vector<GroupElement> qs = all;
    std::shuffle(qs.begin(), qs.end(), rng);
    for (const auto& c : qs) {
        const GroupElement r = f + p0 - c;
        if (t.kind != K::Generic || !(r == c)) return PointSpec::pair(c, r);
    }
    throw Error(ErrorCode::InvalidPointSpec, "no non-focal point on the requested generator of " + s.describe());
}

}  // namespace

GroupElement PointSpec::fiber(const SurfaceModel& s) const {
    if (kind_ == Kind::Pair) return a_ + b_ - s.p0();
    return a_;
}

std::string PointSpec::to_string() const {
    switch (kind_) {
    case Kind::OnX0: return "onX0@" + point_label(a_);
    case Kind::OnX1: return "onX1@" + point_label(a_);
    case Kind::Generic: return "gen@" + point_label(a_);
    case Kind::Pair: return "pair{" + point_label(a_) + "," + point_label(b_) + "}";
    }
    return {};
}

std::string_view rule_name(ElmRule r) noexcept {
    switch (r) {
    case ElmRule::DecHighOnX0: return "DecHighOnX0";
    case ElmRule::DecHighOffX0: return "DecHighOffX0";
    case ElmRule::DecOneOnX0: return "DecOneOnX0";
    case ElmRule::DecOneOffX0: return "DecOneOffX0";
    case ElmRule::DecOneOnX1Special: return "DecOneOnX1Special";
    case ElmRule::DecOneGenSpecial: return "DecOneGenSpecial";
    case ElmRule::DecZeroOnX0: return "DecZeroOnX0";
    case ElmRule::DecZeroOnX1: return "DecZeroOnX1";
    case ElmRule::DecZeroGen: return "DecZeroGen";
    case ElmRule::DecProduct: return "DecProduct";
    case ElmRule::Ind0OnX0: return "Ind0OnX0";
    case ElmRule::Ind0Gen: return "Ind0Gen";
    case ElmRule::IndM1Focal: return "IndM1Focal";
    case ElmRule::IndM1Split: return "IndM1Split";
    }
    return "?";
}

std::string_view y0_name(Y0Note n) noexcept {
    switch (n) {
    case Y0Note::X0prime: return "X0prime";
    case Y0Note::X1prime: return "X1prime";
    case Y0Note::DRprime: return "DRprime";
    }
    return "?";
}

ElmResult elm(const SurfaceModel& s, const PointSpec& x) {
    using K = PointSpec::Kind;
    const CurveGroup& g = s.group();
    if (!(x.q().group() == g) || !(x.r().group() == g))
        throw Error(ErrorCode::MixedGroups, x.to_string() + " is not on " + g.describe());

    switch (s.family()) {
    case SurfaceFamily::Decomposable: {
        if (x.kind() == K::Pair) bad_spec(s, x);
        const GroupElement& p = x.point();
        const DivisorClass e_cls = s.e_class();
        const int e = s.invariant_e();
        if (e_cls.is_trivial())
            return make(SurfaceModel::decomposable(DivisorClass::trivial(g) - p), Y0Note::X0prime,
                        ElmRule::DecProduct, p);
        if (e >= 2) {
            if (x.kind() == K::OnX0)
                return make(SurfaceModel::decomposable(e_cls - p), Y0Note::X0prime, ElmRule::DecHighOnX0, p);
            return make(SurfaceModel::decomposable(e_cls + p), Y0Note::X0prime, ElmRule::DecHighOffX0, p);
        }
        if (e == 1) {
            if (x.kind() == K::OnX0)
                return make(SurfaceModel::decomposable(e_cls - p), Y0Note::X0prime, ElmRule::DecOneOnX0, p);
            if (!(e_cls + p).is_trivial())
                return make(SurfaceModel::decomposable(e_cls + p), Y0Note::X0prime, ElmRule::DecOneOffX0, p);
            if (x.kind() == K::OnX1)
                return make(SurfaceModel::product(g), Y0Note::X0prime, ElmRule::DecOneOnX1Special, p);
            return make(SurfaceModel::indec0(g), Y0Note::X0prime, ElmRule::DecOneGenSpecial, p);
        }
        // e = 0, 𝔢 nontrivial
        switch (x.kind()) {
        case K::OnX0:
            return make(SurfaceModel::decomposable(e_cls - p), Y0Note::X0prime, ElmRule::DecZeroOnX0, p);
        case K::OnX1:
            return make(SurfaceModel::decomposable(-e_cls - p), Y0Note::X1prime, ElmRule::DecZeroOnX1, p);
        default:
            return make(SurfaceModel::indec_minus1(e_cls.abel() + p), Y0Note::X0prime, ElmRule::DecZeroGen, p);
        }
    }
    case SurfaceFamily::Indec0: {
        const GroupElement& p = x.point();
        if (x.kind() == K::OnX0)
            return make(SurfaceModel::decomposable(DivisorClass::trivial(g) - p), Y0Note::X0prime,
                        ElmRule::Ind0OnX0, p);
        if (x.kind() == K::Generic)
            return make(SurfaceModel::indec_minus1(p), Y0Note::X0prime, ElmRule::Ind0Gen, p);
        bad_spec(s, x);
    }
    case SurfaceFamily::IndecMinus1: {
        if (x.kind() != K::Pair) bad_spec(s, x);
        const GroupElement t = x.fiber(s);
        if (x.is_focal()) return make(SurfaceModel::indec0(g), Y0Note::DRprime, ElmRule::IndM1Focal, t);
        return make(SurfaceModel::decomposable(DivisorClass(0, x.q() - x.r())), Y0Note::DRprime,
                    ElmRule::IndM1Split, t);
    }
    }
    bad_spec(s, x);
}

int transport_unisecant(const SurfaceModel& s, const PointSpec& x, const SurfaceDivisorClass& d,
                        bool passes_through) {
    if (d.m != 1)
        throw Error(ErrorCode::InvalidSecancy, "strict transform bookkeeping is for unisecant curves, got m = " +
                                                   std::to_string(d.m));
    (void)x;
    const int self = intersect(s, d, d);
    return passes_through ? self - 1 : self + 1;
}

std::string SystemCorrespondence::to_string() const {
    return std::to_string(secancy) + "X0+" + fiber_class.to_string() + "f - " + std::to_string(multiplicity) + "x";
}

SystemCorrespondence system_correspondence(int secancy, const DivisorClass& a, const GroupElement& p) {
    if (secancy < 1) throw Error(ErrorCode::InvalidSecancy, "system correspondence needs m >= 1");
    SystemCorrespondence out{secancy, a + DivisorClass::point(p).times(secancy), secancy, {}};
    DivisorClass cur = a;
    for (int k = 0; k <= secancy; ++k) {
        out.filtration.push_back({cur, k});
        cur = cur + p;
    }
    return out;
}

std::string to_string(const StepTemplate& t) {
    if (const auto* fixed = std::get_if<PointSpec>(&t)) return fixed->to_string();
    const auto& r = std::get<RandomStep>(t);
    static constexpr const char* kinds[] = {"onX0", "onX1", "gen", "focal", "pair", "any"};
    static constexpr const char* rels[] = {"any", "same", "new"};
    return std::string(kinds[static_cast<int>(r.kind)]) + "@" + rels[static_cast<int>(r.relation)];
}

PointSpec resolve_step(const SurfaceModel& s, const StepTemplate& t, const std::optional<GroupElement>& prev,
                       std::mt19937_64& rng) {
    if (const auto* fixed = std::get_if<PointSpec>(&t)) return *fixed;
    RandomStep step = std::get<RandomStep>(t);
    using K = RandomStep::Kind;

    if (s.family() == SurfaceFamily::IndecMinus1) {
        if (step.kind == K::OnX0 || step.kind == K::OnX1)
            throw Error(ErrorCode::InvalidPointSpec, "no X0/X1 point spec on " + s.describe());
        if (step.kind == K::Any) step.kind = K::Pair;
        return resolve_pair(s, step, prev, rng);
    }
    if (step.kind == K::Focal || step.kind == K::Pair)
        throw Error(ErrorCode::InvalidPointSpec, "pair point specs only exist on the e = -1 surface");
    if (step.kind == K::OnX1 && s.family() == SurfaceFamily::Indec0)
        throw Error(ErrorCode::InvalidPointSpec, "ind0 has no second section X1");
    if (step.kind == K::Any) {
        const int choices = s.family() == SurfaceFamily::Indec0 ? 2 : 3;
        const int c = std::uniform_int_distribution<int>(0, choices - 1)(rng);
        step.kind = c == 0 ? K::OnX0 : c == 1 ? K::Generic : K::OnX1;
    }
    const GroupElement p = pick_fiber(s.group().enumerate(), step.relation, prev, rng);
    switch (step.kind) {
    case K::OnX0: return PointSpec::on_x0(p);
    case K::OnX1: return PointSpec::on_x1(p);
    default: return PointSpec::generic(p);
    }
}

Trajectory walk(const SurfaceModel& s0, const std::vector<StepTemplate>& steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Trajectory out;
    out.models.push_back(s0);
    std::optional<GroupElement> prev;
    for (const auto& t : steps) {
        const SurfaceModel& cur = out.models.back();
        PointSpec x = resolve_step(cur, t, prev, rng);
        ElmResult r = elm(cur, x);
        prev = r.fiber;
        out.points.push_back(x);
        out.models.push_back(r.model);
        out.results.push_back(std::move(r));
    }
    return out;
}

}  // namespace ersurf
