#include "ersurf/linsys.hpp"

#include "ersurf/errors.hpp"

namespace ersurf {
namespace {

void require_m12(const SurfaceDivisorClass& h, const char* op) {
    if (h.m <= 0)
        throw Error(ErrorCode::InvalidSecancy, std::string(op) + " needs m >= 1, got " + std::to_string(h.m));
    if (h.m >= 3)
        throw Error(ErrorCode::UnsupportedSecancy,
                    std::string(op) + " is only classified for m in {1,2}, got " + std::to_string(h.m));
}

bool share_base_point(const CurveBaseLocus& a, const CurveBaseLocus& b) {
    using K = CurveBaseLocus::Kind;
    if (a.kind == K::None || b.kind == K::None) return false;
    if (a.kind == K::Everything || b.kind == K::Everything) return true;
    return *a.point == *b.point;
}

// -1-degree classes 𝔟 on IndecMinus1(p0) with 2(-𝔟) ~ 2p0 and -𝔟 ≁ p0.
bool is_exceptional_minus_one(const GroupElement& p0, const DivisorClass& b) {
    if (b.degree() != -1) return false;
    const GroupElement q = -b.abel();
    return q + q == p0 + p0 && !(q == p0);
}

bool dec_bpf(const DivisorClass& b, const DivisorClass& e, int m) {
    return is_bpf_curve(b) && is_bpf_curve(b + e.times(m));
}

bool dec_very_ample(const DivisorClass& b, const DivisorClass& e, int m) {
    return is_very_ample_curve(b) && is_very_ample_curve(b + e.times(m));
}

bool dec_irreducible_unisecant(const DivisorClass& b, const DivisorClass& e) {
    if (b.is_trivial() || (b + e).is_trivial()) return true;
    if (h0(b) == 0 || h0(b + e) == 0) return false;
    return !share_base_point(base_locus(b), base_locus(b + e));
}

bool dec_irreducible_bisecant(const DivisorClass& b, const DivisorClass& e_cls) {
    const int e = -e_cls.degree();
    const int deg = b.degree();
    if (deg >= 2 * e + 2) return true;
    if (deg == 2 * e + 1 && !e_cls.is_trivial()) return true;
    if (b == -e_cls.times(2)) {
        if (e > 0) return true;
        if (e == 0 && !e_cls.is_trivial() && e_cls.times(2).is_trivial()) return true;
    }
    return false;
}

}  // namespace

int h0_bound(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    const DivisorClass e = s.e_class();
    int total = 0;
    for (int k = 0; k <= h.m; ++k) total += h0(h.b + e.times(k));
    return total;
}

bool nonspecial_chain(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    const DivisorClass e = s.e_class();
    for (int k = 0; k < h.m; ++k)
        if (!is_nonspecial(h.b + e.times(k))) return false;
    return true;
}

int h0_surface(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    if (h.m < 0) return 0;
    if (h.m == 0 || s.is_decomposable()) return h0_bound(s, h);
    if (h.m >= 3)
        throw Error(ErrorCode::UnsupportedSecancy,
                    "no closed form for h0 of a " + std::to_string(h.m) + "-secant system on " + s.describe() +
                        "; use h0_bound");
    const int deg = h.b.degree();
    if (s.family() == SurfaceFamily::Indec0) {
        if (deg >= 1) return h.m == 1 ? 2 * deg : 3 * deg;
        return h.b.is_trivial() ? 1 : 0;
    }
    // e = -1
    if (h.m == 1) {
        if (deg >= 1) return 2 * deg + 1;
        return deg == 0 ? 1 : 0;
    }
    if (deg >= 0) return 3 * deg + 3;
    if (deg == -1) return is_exceptional_minus_one(s.p0(), h.b) ? 1 : 0;
    return 0;
}

int h1_surface(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    if (!nonspecial_chain(s, h))
        throw Error(ErrorCode::HypothesisNotMet,
                    "some 𝔟 + k𝔢 (k < m) is special for " + h.to_string() + " on " + s.describe());
    return h1(h.b + s.e_class().times(h.m));
}

int speciality(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    return h0_surface(s, h) - euler_characteristic(s, h);
}

bool is_bpf(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    require_m12(h, "is_bpf");
    const int e = s.invariant_e();
    if (s.is_decomposable()) return dec_bpf(h.b, s.e_class(), h.m);
    const int deg = h.b.degree();
    if (h.m == 1) return deg >= 2 + e;
    return s.family() == SurfaceFamily::Indec0 ? deg >= 2 : deg >= 0;
}

bool is_very_ample(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    require_m12(h, "is_very_ample");
    const int e = s.invariant_e();
    if (s.is_decomposable()) return dec_very_ample(h.b, s.e_class(), h.m);
    const int deg = h.b.degree();
    if (h.m == 1) return deg >= 3 + e;
    return s.family() == SurfaceFamily::Indec0 ? deg >= 3 : deg >= 1;
}

Irreducibility generic_irreducible(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    require_m12(h, "generic_irreducible");
    const int deg = h.b.degree();
    bool irreducible = false;
    switch (s.family()) {
    case SurfaceFamily::Decomposable:
        irreducible = h.m == 1 ? dec_irreducible_unisecant(h.b, s.e_class())
                               : dec_irreducible_bisecant(h.b, s.e_class());
        break;
    case SurfaceFamily::Indec0:
        irreducible = h.m == 1 ? (h.b.is_trivial() || deg >= 1) : deg >= 1;
        break;
    case SurfaceFamily::IndecMinus1:
        irreducible = h.m == 1 ? deg >= 0 : (deg >= 0 || is_exceptional_minus_one(s.p0(), h.b));
        break;
    }
    if (!irreducible) return {};
    return {true, genus_adjunction(s, h)};
}

bool linearly_normal_image(const SurfaceModel& s, const DivisorClass& b, const DivisorClass& a) {
    const SurfaceDivisorClass hyper{1, b};
    if (!is_bpf(s, hyper))
        throw Error(ErrorCode::PreconditionViolated, "|" + hyper.to_string() + "| has base points on " + s.describe());
    if (!generic_irreducible(s, {1, a}).irreducible)
        throw Error(ErrorCode::PreconditionViolated,
                    "|X0+" + a.to_string() + "f| has no irreducible member on " + s.describe());
    const DivisorClass e = s.e_class();
    if (s.is_decomposable()) {
        if (b.is_trivial())
            throw Error(ErrorCode::PreconditionViolated, "𝔟 ~ 0 on a decomposable surface");
        if (a.is_trivial() || a == -e)
            throw Error(ErrorCode::PreconditionViolated, "D is linearly equivalent to X0 or X1");
    }
    return h0_surface(s, hyper) == h0(a + b + e) + h0(b - a);
}

bool bpf_on_generator_criterion(const SurfaceModel& s, const SurfaceDivisorClass& h, const GroupElement& p) {
    if (h.m < 1) throw Error(ErrorCode::InvalidSecancy, "criterion needs m >= 1");
    return h0_surface(s, h.minus_fiber(p)) == h0_surface(s, h) - (h.m + 1);
}

MSecantNecessary necessary_conditions_msecant(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    if (h.m < 1) throw Error(ErrorCode::InvalidSecancy, "m-secant conditions need m >= 1");
    const DivisorClass restricted = h.b + s.e_class().times(h.m);
    return {base_locus(restricted), is_very_ample_curve(restricted)};
}

SystemAnalysis analyze(const SurfaceModel& s, const SurfaceDivisorClass& h) {
    require_m12(h, "analyze");
    SystemAnalysis out;
    out.h0 = h0_surface(s, h);
    out.h1 = out.h0 - euler_characteristic(s, h);
    out.bpf = is_bpf(s, h);
    out.very_ample = is_very_ample(s, h);
    const auto irr = generic_irreducible(s, h);
    out.generic_irreducible = irr.irreducible;
    if (irr.irreducible) {
        out.generic_smooth = true;
        out.genus_generic = irr.genus;
    }
    out.degree = intersect(s, h, h);
    if (out.h0 >= 1) out.ambient = out.h0 - 1;
    return out;
}

}  // namespace ersurf
