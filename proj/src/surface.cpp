#include "ersurf/surface.hpp"

#include "ersurf/errors.hpp"

namespace ersurf {
namespace {

const IndecMinus1& require_minus1(const SurfaceModel& s, const char* op) {
    if (const auto* m1 = std::get_if<IndecMinus1>(&s.variant())) return *m1;
    throw Error(ErrorCode::PreconditionViolated,
                std::string(op) + " needs the e=-1 indecomposable surface, got " + s.describe());
}

}  // namespace

SurfaceModel SurfaceModel::decomposable(const DivisorClass& e_class) {
    if (e_class.degree() > 0)
        throw Error(ErrorCode::NonNormalizedInput,
                    "decomposable surface with deg(e) = " + std::to_string(e_class.degree()) +
                        " > 0 is not normalized");
    return SurfaceModel(Decomposable{e_class});
}

const CurveGroup& SurfaceModel::group() const {
    return std::visit(
        [](const auto& v) -> const CurveGroup& {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Decomposable>) return v.e_class.group();
            else if constexpr (std::is_same_v<T, Indec0>) return v.group;
            else return v.p0.group();
        },
        variant_);
}

DivisorClass SurfaceModel::e_class() const {
    return std::visit(
        [](const auto& v) -> DivisorClass {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Decomposable>) return v.e_class;
            else if constexpr (std::is_same_v<T, Indec0>) return DivisorClass::trivial(v.group);
            else return DivisorClass::point(v.p0);
        },
        variant_);
}

const GroupElement& SurfaceModel::p0() const { return require_minus1(*this, "p0").p0; }

std::string SurfaceModel::describe() const {
    switch (family()) {
    case SurfaceFamily::Decomposable: return "dec(" + e_class().to_string() + ")";
    case SurfaceFamily::Indec0: return "ind0";
    case SurfaceFamily::IndecMinus1: return "indm1(" + p0().to_string() + ")";
    }
    return {};
}

std::string SurfaceDivisorClass::to_string() const {
    return std::to_string(m) + "X0+" + b.to_string() + "f";
}

int intersect(const SurfaceModel& s, const SurfaceDivisorClass& a, const SurfaceDivisorClass& b) {
    return a.m * b.m * s.e_class().degree() + a.m * b.b.degree() + b.m * a.b.degree();
}

SurfaceDivisorClass canonical_class(const SurfaceModel& s) { return {-2, s.e_class()}; }

int genus_adjunction(const SurfaceModel& s, const SurfaceDivisorClass& d) {
    if (d.m <= 0)
        throw Error(ErrorCode::InvalidSecancy, "genus needs secancy m >= 1, got " + std::to_string(d.m));
    return intersect(s, d, d + canonical_class(s)) / 2 + 1;
}

int euler_characteristic(const SurfaceModel& s, const SurfaceDivisorClass& d) {
    return intersect(s, d, d - canonical_class(s)) / 2;
}

SurfaceDivisorClass MinCurve::divisor_class(const SurfaceModel& s) const {
    const auto& p0 = require_minus1(s, "min curve").p0;
    return {1, DivisorClass(0, q - p0)};
}

SurfacePointDescriptor::SurfacePointDescriptor(const GroupElement& a, const GroupElement& b,
                                               const GroupElement& generator)
    : q_(a < b ? a : b), r_(a < b ? b : a), t_(generator) {}

std::string SurfacePointDescriptor::to_string() const {
    return "pair{" + q_.to_string() + "," + r_.to_string() + "} on " + t_.to_string() + "f";
}

SurfacePointDescriptor tau(const SurfaceModel& s, const GroupElement& q, const GroupElement& r) {
    const auto& p0 = require_minus1(s, "tau").p0;
    return {q, r, q + r - p0};
}

std::vector<MinCurve> min_curves_through(const SurfaceModel& s, const SurfacePointDescriptor& x) {
    require_minus1(s, "min_curves_through");
    if (x.is_focal()) return {MinCurve{x.q()}};
    return {MinCurve{x.q()}, MinCurve{x.r()}};
}

std::vector<GroupElement> ramification_points(const SurfaceModel& s, const GroupElement& t) {
    const auto& p0 = require_minus1(s, "ramification_points").p0;
    auto roots = p0.group().halvings(t + p0);
    if (!roots.empty() && roots.size() != 4)
        throw Error(ErrorCode::DegenerateModel,
                    p0.group().describe() + " gives " + std::to_string(roots.size()) +
                        " solutions of 2R = T + p0; full 2-torsion is required");
    return roots;
}

std::vector<SurfacePointDescriptor> points_on_generator(const SurfaceModel& s, const GroupElement& t) {
    const auto& p0 = require_minus1(s, "points_on_generator").p0;
    const GroupElement target = t + p0;
    std::vector<SurfacePointDescriptor> out;
    for (const auto& q : p0.group().enumerate()) {
        GroupElement r = target - q;
        if (q <= r) out.emplace_back(q, r, t);
    }
    return out;
}

SurfacePointDescriptor Renormalization::map(const SurfacePointDescriptor& x) const {
    return tau(model, x.q() + shift, x.r() + shift);
}

Renormalization renormalize(const SurfaceModel& s, const GroupElement& r) {
    const auto& p0 = require_minus1(s, "renormalize").p0;
    return {SurfaceModel::indec_minus1(r + r - p0), r - p0};
}

}  // namespace ersurf
