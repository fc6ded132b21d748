#include "ersurf/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "ersurf/errors.hpp"
#include "ersurf/linsys.hpp"

namespace ersurf {
namespace {

UnisecantFamily family(FamilyKind kind, int min_deg, int offset, Normality n, FamilyNote note = FamilyNote::None) {
    return {kind, min_deg, offset, n, note};
}

Normality always() { return {Normality::Mode::Always, 0, false}; }
Normality never() { return {Normality::Mode::Never, 0, false}; }
Normality up_to(int d) { return {Normality::Mode::UpTo, d, true}; }

int family_rank(const ScrollModel& m) {
    if (m.family != SurfaceFamily::Decomposable) return 0;
    return m.e_trivial ? 1 : 2;
}

std::string e_label(const ScrollModel& m) {
    std::string out = "e=" + std::to_string(m.e);
    if (m.family == SurfaceFamily::IndecMinus1) return out + " ind e~P";
    if (m.family == SurfaceFamily::Indec0) return out + " ind e~0";
    if (m.e == 0) return out + (m.e_trivial ? " e~0" : " e~P-Q");
    return out;
}

std::string systems_label(const ScrollModel& m) {
    std::string out;
    for (const auto& f : m.families) {
        if (!out.empty()) out += ", ";
        switch (f.kind) {
        case FamilyKind::X0: out += "|X0|"; break;
        case FamilyKind::X1: out += "|X1|"; break;
        case FamilyKind::Band: out += "|X0+af| deg a>=" + std::to_string(f.min_deg_a); break;
        case FamilyKind::Hyperplane: out += "|H|"; break;
        }
    }
    return out;
}

std::string generation_label(const ScrollModel& m) {
    switch (m.tag) {
    case ScrollTag::DegenerateLine: return "degenerate: line";
    case ScrollTag::DoubleQuadric: return "degenerate: double quadric";
    case ScrollTag::DoublePlane: return "degenerate: double plane";
    case ScrollTag::TriplePlane: return "degenerate: triple plane";
    case ScrollTag::Cone:
        return "cone over C" + std::to_string(m.e) + ", degree " + std::to_string(m.scroll_degree) +
               ", speciality " + std::to_string(m.speciality);
    default: break;
    }
    const auto& g = *m.generation;
    std::string out = "C" + std::to_string(g.left_degree) + " -(" + std::string(correspondence_name(g.correspondence)) +
                      ")-> C" + std::to_string(g.right_degree);
    if (g.united_points > 0) out += ", " + std::to_string(g.united_points) + " united point";
    return out + ", degree " + std::to_string(m.scroll_degree);
}

}  // namespace

bool UnisecantFamily::linearly_normal(const DivisorClass& a, const DivisorClass& b) const {
    switch (normality.mode) {
    case Normality::Mode::Always: return true;
    case Normality::Mode::Never:
    case Normality::Mode::NotApplicable: return false;
    case Normality::Mode::UpTo: return a.degree() <= normality.deg && (!normality.excludes_b || !(a == b));
    case Normality::Mode::Exactly: return a.degree() == normality.deg;
    }
    return false;
}

std::string_view tag_name(ScrollTag t) noexcept {
    switch (t) {
    case ScrollTag::DegenerateLine: return "DegenerateLine";
    case ScrollTag::DoubleQuadric: return "DoubleQuadric";
    case ScrollTag::DoublePlane: return "DoublePlane";
    case ScrollTag::TriplePlane: return "TriplePlane";
    case ScrollTag::Cone: return "Cone";
    case ScrollTag::DecScrollDirectrixLine: return "DecScrollDirectrixLine";
    case ScrollTag::DecScrollTwoLines: return "DecScrollTwoLines";
    case ScrollTag::DecScrollSmooth: return "DecScrollSmooth";
    case ScrollTag::Ind0Quartic: return "Ind0Quartic";
    case ScrollTag::Ind0Smooth: return "Ind0Smooth";
    case ScrollTag::IndM1Smooth: return "IndM1Smooth";
    }
    return "?";
}

std::string_view singular_name(SingularLocus s) noexcept {
    switch (s) {
    case SingularLocus::Empty: return "Empty";
    case SingularLocus::Vertex: return "Vertex";
    case SingularLocus::DoubleLine: return "DoubleLine";
    case SingularLocus::TwoDisjointLines: return "TwoDisjointLines";
    case SingularLocus::DirectrixLine: return "DirectrixLine";
    }
    return "?";
}

std::string_view correspondence_name(Correspondence c) noexcept {
    switch (c) {
    case Correspondence::OneOne: return "1:1";
    case Correspondence::OneTwo: return "1:2";
    case Correspondence::TwoTwo: return "2:2";
    }
    return "?";
}

std::string_view family_kind_name(FamilyKind k) noexcept {
    switch (k) {
    case FamilyKind::X0: return "X0";
    case FamilyKind::X1: return "X1";
    case FamilyKind::Band: return "Band";
    case FamilyKind::Hyperplane: return "Hyperplane";
    }
    return "?";
}

std::string_view note_name(FamilyNote n) noexcept {
    switch (n) {
    case FamilyNote::None: return "None";
    case FamilyNote::HyperplaneSections: return "HyperplaneSections";
    case FamilyNote::UniqueDirectrix: return "UniqueDirectrix";
    case FamilyNote::OneDimensionalFamily: return "OneDimensionalFamily";
    case FamilyNote::Vertex: return "Vertex";
    }
    return "?";
}

std::string_view normality_name(Normality::Mode m) noexcept {
    switch (m) {
    case Normality::Mode::Always: return "Always";
    case Normality::Mode::Never: return "Never";
    case Normality::Mode::UpTo: return "UpTo";
    case Normality::Mode::Exactly: return "Exactly";
    case Normality::Mode::NotApplicable: return "NotApplicable";
    }
    return "?";
}

ScrollModel classify_scroll(const SurfaceModel& s, const DivisorClass& b) {
    const SurfaceDivisorClass hyper{1, b};
    if (!is_bpf(s, hyper))
        throw Error(ErrorCode::NotBasePointFree, "|" + hyper.to_string() + "| has base points on " + s.describe());

    const DivisorClass e_cls = s.e_class();
    ScrollModel m;
    m.family = s.family();
    m.e = s.invariant_e();
    m.b = b.degree();
    m.e_trivial = e_cls.is_trivial();
    m.b_minus_e = b == -e_cls;
    const int h0v = h0_surface(s, hyper);
    m.ambient = h0v - 1;
    m.speciality = h0v - euler_characteristic(s, hyper);
    m.scroll_degree = intersect(s, hyper, hyper);
    const int offset = m.b - m.e;

    auto degenerate = [&](ScrollTag tag, int map_degree) {
        m.tag = tag;
        m.birational = false;
        m.map_degree = map_degree;
        m.scroll_degree = tag == ScrollTag::DoubleQuadric ? 2 : 1;
        return m;
    };

    switch (s.family()) {
    case SurfaceFamily::Decomposable: {
        if (m.e_trivial && b.is_trivial()) return degenerate(ScrollTag::DegenerateLine, 1);
        if (m.e_trivial && m.b == 2) return degenerate(ScrollTag::DoubleQuadric, 2);
        if (m.e > 0 && m.b_minus_e) {
            if (m.e == 2) return degenerate(ScrollTag::DoublePlane, 2);
            m.tag = ScrollTag::Cone;
            m.singular_locus = SingularLocus::Vertex;
            m.families = {
                family(FamilyKind::X0, 0, offset, {Normality::Mode::NotApplicable, 0, false}, FamilyNote::Vertex),
                family(FamilyKind::X1, m.e, offset, always(), FamilyNote::HyperplaneSections),
                family(FamilyKind::Band, m.e + 1, offset, {Normality::Mode::Exactly, m.e + 1, false}),
            };
            return m;
        }
        if (m.e == 0 && !m.e_trivial && m.b == 2) {
            m.tag = ScrollTag::DecScrollTwoLines;
            m.singular_locus = SingularLocus::TwoDisjointLines;
            m.generation = Generation{2, 2, Correspondence::TwoTwo, 0};
        } else if (m.e > 0 && m.b == m.e + 2) {
            m.tag = ScrollTag::DecScrollDirectrixLine;
            m.singular_locus = SingularLocus::DirectrixLine;
            m.generation = Generation{2, m.e + 2, Correspondence::OneTwo, 0};
        } else {
            m.tag = ScrollTag::DecScrollSmooth;
            m.generation = Generation{m.b - m.e, m.b, Correspondence::OneOne, 0};
        }
        const FamilyNote x0_note = m.e_trivial ? FamilyNote::OneDimensionalFamily
                                   : m.e > 0   ? FamilyNote::UniqueDirectrix
                                               : FamilyNote::None;
        m.families.push_back(family(FamilyKind::X0, 0, offset, always(), x0_note));
        if (!m.e_trivial) m.families.push_back(family(FamilyKind::X1, m.e, offset, always()));
        m.families.push_back(family(FamilyKind::Band, m.e_trivial ? 2 : m.e + 1, offset, up_to(m.b)));
        m.families.push_back(family(FamilyKind::Hyperplane, m.b, offset, never(), FamilyNote::HyperplaneSections));
        return m;
    }
    case SurfaceFamily::Indec0:
        if (m.b == 2) {
            m.tag = ScrollTag::Ind0Quartic;
            m.singular_locus = SingularLocus::DoubleLine;
            m.generation = Generation{2, 3, Correspondence::OneTwo, 1};
        } else {
            m.tag = ScrollTag::Ind0Smooth;
            m.generation = Generation{m.b, m.b + 1, Correspondence::OneOne, 1};
        }
        m.families = {
            family(FamilyKind::X0, 0, offset, always(), FamilyNote::UniqueDirectrix),
            family(FamilyKind::Band, 1, offset, up_to(m.b)),
            family(FamilyKind::Hyperplane, m.b, offset, never(), FamilyNote::HyperplaneSections),
        };
        return m;
    case SurfaceFamily::IndecMinus1:
        if (m.b == 1) return degenerate(ScrollTag::TriplePlane, 3);
        m.tag = ScrollTag::IndM1Smooth;
        m.generation = Generation{m.b + 1, m.b + 1, Correspondence::OneOne, 1};
        m.families = {
            family(FamilyKind::Band, 0, offset, up_to(m.b), FamilyNote::OneDimensionalFamily),
            family(FamilyKind::Hyperplane, m.b, offset, never(), FamilyNote::HyperplaneSections),
        };
        return m;
    }
    return m;
}

std::vector<ScrollModel> emit_table(int n, const CurveGroup& group) {
    if (n < 3) throw Error(ErrorCode::PreconditionViolated, "tables start at N = 3");
    const auto elements = group.enumerate();
    const auto nonzero = std::find_if(elements.begin(), elements.end(), [](const auto& g) { return !g.is_zero(); });
    if (nonzero == elements.end())
        throw Error(ErrorCode::PreconditionViolated, "table representatives need a nonzero group element");
    const GroupElement zero = group.zero();

    std::vector<SurfaceModel> surfaces = {SurfaceModel::indec0(group), SurfaceModel::indec_minus1(zero),
                                          SurfaceModel::product(group),
                                          SurfaceModel::decomposable(DivisorClass(0, *nonzero))};
    for (int e = 1; e <= n; ++e) surfaces.push_back(SurfaceModel::decomposable(DivisorClass(-e, zero)));

    std::vector<ScrollModel> rows;
    std::set<std::tuple<int, int, int, int, bool>> seen;
    for (const auto& s : surfaces) {
        const DivisorClass e_cls = s.e_class();
        for (int d = -1; d <= n + 2; ++d) {
            std::vector<DivisorClass> reps;
            for (const auto& g : elements) {
                DivisorClass c(d, g);
                if (!c.is_trivial() && !(c == -e_cls)) {
                    reps.push_back(c);
                    break;
                }
            }
            if (d == 0) reps.push_back(DivisorClass::trivial(group));
            if (d == -e_cls.degree()) reps.push_back(-e_cls);
            for (const auto& b : reps) {
                if (!is_bpf(s, {1, b})) continue;
                ScrollModel m = classify_scroll(s, b);
                if (m.ambient != n) continue;
                auto key = std::make_tuple(m.e, family_rank(m), static_cast<int>(m.tag), m.b, m.b_minus_e);
                if (seen.insert(key).second) rows.push_back(std::move(m));
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ScrollModel& a, const ScrollModel& b) {
        return std::make_tuple(a.e, family_rank(a), a.b) < std::make_tuple(b.e, family_rank(b), b.b);
    });
    return rows;
}

std::string render_table(int n, const std::vector<ScrollModel>& rows) {
    std::ostringstream os;
    os << "Elliptic scrolls in P^" << n << "\n";
    char line[512];
    std::snprintf(line, sizeof line, "%-14s %-6s %-44s %-48s %s\n", "e", "deg b", "irreducible systems", "generation",
                  "sing.");
    os << line;
    for (const auto& m : rows) {
        std::string b = std::to_string(m.b) + (m.b_minus_e ? " b~-e" : "");
        std::snprintf(line, sizeof line, "%-14s %-6s %-44s %-48s %s\n", e_label(m).c_str(), b.c_str(),
                      systems_label(m).c_str(), generation_label(m).c_str(),
                      std::string(singular_name(m.singular_locus)).c_str());
        os << line;
    }
    return os.str();
}

// --- Nagata plans ---------------------------------------------------------

bool NagataTarget::matches(const SurfaceModel& s) const {
    switch (kind) {
    case Kind::DecTrivial: return s.is_decomposable() && s.e_class().is_trivial();
    case Kind::DecZero: return s.is_decomposable() && s.invariant_e() == 0 && !s.e_class().is_trivial();
    case Kind::DecOne: return s.is_decomposable() && s.invariant_e() == 1;
    case Kind::DecHigh: return s.is_decomposable() && s.invariant_e() == e;
    case Kind::Indec0: return s.family() == SurfaceFamily::Indec0;
    case Kind::IndecMinus1: return s.family() == SurfaceFamily::IndecMinus1;
    }
    return false;
}

std::string NagataTarget::to_string() const {
    switch (kind) {
    case Kind::DecTrivial: return "dectriv";
    case Kind::DecZero: return "dec0";
    case Kind::DecOne: return "dec1";
    case Kind::DecHigh: return "dec" + std::to_string(e);
    case Kind::Indec0: return "ind0";
    case Kind::IndecMinus1: return "indm1";
    }
    return "?";
}

NagataPlan nagata_plan(const NagataTarget& target) {
    using K = RandomStep::Kind;
    using R = RandomStep::Relation;
    NagataPlan plan{target, {}, 0};
    switch (target.kind) {
    case NagataTarget::Kind::DecTrivial: break;
    case NagataTarget::Kind::DecZero:
        plan.steps = {RandomStep{K::Generic, R::Any}, RandomStep{K::Generic, R::DistinctFromPrevious}};
        break;
    case NagataTarget::Kind::DecOne: plan.steps = {RandomStep{K::Generic, R::Any}}; break;
    case NagataTarget::Kind::DecHigh:
        if (target.e < 2) throw Error(ErrorCode::PreconditionViolated, "dec target with e >= 2 expected");
        plan.steps.assign(target.e, RandomStep{K::OnX0, R::Any});
        break;
    case NagataTarget::Kind::Indec0:
        // second center on the exceptional generator over the same P
        plan.steps = {RandomStep{K::Generic, R::Any}, RandomStep{K::Generic, R::SameAsPrevious}};
        break;
    case NagataTarget::Kind::IndecMinus1:
        plan.steps = {RandomStep{K::Generic, R::Any}, RandomStep{K::Generic, R::DistinctFromPrevious},
                      RandomStep{K::Generic, R::Any}};
        break;
    }
    plan.length = static_cast<int>(plan.steps.size());
    return plan;
}

Trajectory execute_plan(const NagataPlan& plan, const CurveGroup& group, std::uint64_t seed) {
    return walk(SurfaceModel::product(group), plan.steps, seed);
}

std::vector<PointSpec> all_point_specs(const SurfaceModel& s) {
    const auto elements = s.group().enumerate();
    std::vector<PointSpec> out;
    switch (s.family()) {
    case SurfaceFamily::Decomposable:
        for (const auto& p : elements) {
            out.push_back(PointSpec::on_x0(p));
            out.push_back(PointSpec::on_x1(p));
            out.push_back(PointSpec::generic(p));
        }
        break;
    case SurfaceFamily::Indec0:
        for (const auto& p : elements) {
            out.push_back(PointSpec::on_x0(p));
            out.push_back(PointSpec::generic(p));
        }
        break;
    case SurfaceFamily::IndecMinus1:
        for (std::size_t i = 0; i < elements.size(); ++i)
            for (std::size_t j = i; j < elements.size(); ++j) out.push_back(PointSpec::pair(elements[i], elements[j]));
        break;
    }
    return out;
}

int minimality_check(const NagataTarget& target, int max_len, const CurveGroup& group) {
    if (max_len > 4) throw Error(ErrorCode::PreconditionViolated, "exhaustive search is capped at length 4");
    const SurfaceModel start = SurfaceModel::product(group);
    if (target.matches(start)) return 0;
    std::unordered_set<std::string> seen{start.describe()};
    std::vector<SurfaceModel> frontier{start};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<SurfaceModel> next;
        for (const auto& s : frontier) {
            for (const auto& x : all_point_specs(s)) {
                SurfaceModel t = elm(s, x).model;
                if (target.matches(t)) return len;
                if (seen.insert(t.describe()).second) next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    return -1;
}

}  // namespace ersurf
