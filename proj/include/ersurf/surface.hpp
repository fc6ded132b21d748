#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ersurf/picard.hpp"

namespace ersurf {

/// Normalized decomposable surface P(O_X + O_X(e)); deg(e) <= 0.
struct Decomposable {
    DivisorClass e_class;
    friend bool operator==(const Decomposable&, const Decomposable&) = default;
};

/// The indecomposable surface with e = 0 (invariant class trivial).
struct Indec0 {
    CurveGroup group;
    friend bool operator==(const Indec0&, const Indec0&) = default;
};

/// The indecomposable surface with e = -1 and invariant class ~ p0.
struct IndecMinus1 {
    GroupElement p0;
    friend bool operator==(const IndecMinus1&, const IndecMinus1&) = default;
};

enum class SurfaceFamily { Decomposable, Indec0, IndecMinus1 };

class SurfaceModel {
public:
    /// Throws NonNormalizedInput when deg(e_class) > 0.
    static SurfaceModel decomposable(const DivisorClass& e_class);
    static SurfaceModel indec0(const CurveGroup& group) { return SurfaceModel(Indec0{group}); }
    static SurfaceModel indec_minus1(const GroupElement& p0) { return SurfaceModel(IndecMinus1{p0}); }
    /// X x P^1.
    static SurfaceModel product(const CurveGroup& group) {
        return decomposable(DivisorClass::trivial(group));
    }

    SurfaceFamily family() const noexcept { return static_cast<SurfaceFamily>(variant_.index()); }
    bool is_decomposable() const noexcept { return family() == SurfaceFamily::Decomposable; }
    const CurveGroup& group() const;

    /// The class 𝔢 with O_{X0}(X0) ~ 𝔢.
    DivisorClass e_class() const;
    /// e = -deg(𝔢).
    int invariant_e() const { return -e_class().degree(); }

    const std::variant<Decomposable, Indec0, IndecMinus1>& variant() const noexcept { return variant_; }
    /// Only valid on IndecMinus1.
    const GroupElement& p0() const;

    /// "dec((-2, O))", "ind0", "indm1((1,0))".
    std::string describe() const;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

private:
    explicit SurfaceModel(std::variant<Decomposable, Indec0, IndecMinus1> v) : variant_(std::move(v)) {}

    std::variant<Decomposable, Indec0, IndecMinus1> variant_;
};

/// The class m X0 + 𝔟 f.
struct SurfaceDivisorClass {
    int m;
    DivisorClass b;

    SurfaceDivisorClass operator+(const SurfaceDivisorClass& o) const { return {m + o.m, b + o.b}; }
    SurfaceDivisorClass operator-(const SurfaceDivisorClass& o) const { return {m - o.m, b - o.b}; }
    /// H - Pf.
    SurfaceDivisorClass minus_fiber(const GroupElement& p) const { return {m, b - p}; }

    std::string to_string() const;
    friend bool operator==(const SurfaceDivisorClass&, const SurfaceDivisorClass&) = default;
};

/// Numerical intersection: m_A m_B deg(𝔢) + m_A deg(b_B) + m_B deg(b_A).
int intersect(const SurfaceModel& s, const SurfaceDivisorClass& a, const SurfaceDivisorClass& b);

/// Canonical class -2X0 + 𝔢f (the curve's canonical class is trivial).
SurfaceDivisorClass canonical_class(const SurfaceModel& s);

/// Arithmetic genus by adjunction, 2g - 2 = D.(D + K). Requires m >= 1.
int genus_adjunction(const SurfaceModel& s, const SurfaceDivisorClass& d);

/// Holomorphic Euler characteristic D.(D - K)/2 (chi(O_S) = 0 over genus 1).
int euler_characteristic(const SurfaceModel& s, const SurfaceDivisorClass& d);

// --- geometry of the e = -1 surface -------------------------------------

/// D_q ~ X0 + (q - p0) f, a curve of self-intersection 1.
struct MinCurve {
    GroupElement q;
    SurfaceDivisorClass divisor_class(const SurfaceModel& s) const;
    friend bool operator==(const MinCurve&, const MinCurve&) = default;
};

/**
 * A point of the e = -1 surface named by the unordered pair {q, r} in S^2X:
 * the point D_q ∩ D_r, lying on the generator T f with q + r = p0 + T.
 * Diagonal pairs are the focal-curve points.
 */
class SurfacePointDescriptor {
public:
    SurfacePointDescriptor(const GroupElement& a, const GroupElement& b, const GroupElement& generator);

    const GroupElement& q() const noexcept { return q_; }
    const GroupElement& r() const noexcept { return r_; }
    const GroupElement& generator() const noexcept { return t_; }
    bool is_focal() const noexcept { return q_ == r_; }

    std::string to_string() const;
    friend bool operator==(const SurfacePointDescriptor&, const SurfacePointDescriptor&) = default;
    friend auto operator<=>(const SurfacePointDescriptor& a, const SurfacePointDescriptor& b) {
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        return a.r_ <=> b.r_;
    }

private:
    GroupElement q_;
    GroupElement r_;
    GroupElement t_;
};

/// τ: S^2X -> S, {q, r} ↦ D_q ∩ T f with q + r ~ p0 + T.
SurfacePointDescriptor tau(const SurfaceModel& s, const GroupElement& q, const GroupElement& r);

/// {D_q, D_r}, or {D_q} on the focal curve.
std::vector<MinCurve> min_curves_through(const SurfaceModel& s, const SurfacePointDescriptor& x);

/// Points R with 2R ~ T + p0: the ramification points of |T + p0| and the
/// focal points on generator T f. Throws DegenerateModel when the count is
/// neither 0 nor 4 (the group model lacks full 2-torsion).
std::vector<GroupElement> ramification_points(const SurfaceModel& s, const GroupElement& t);

/// Descriptors of every point on generator T f, in S^2X order.
std::vector<SurfacePointDescriptor> points_on_generator(const SurfaceModel& s, const GroupElement& t);

/**
 * Taking D_R as the new minimum curve re-normalizes IndecMinus1(p0) to
 * IndecMinus1(2R - p0); min-curve labels shift by R - p0.
 */
struct Renormalization {
    SurfaceModel model;
    GroupElement shift;
    SurfacePointDescriptor map(const SurfacePointDescriptor& x) const;
};
Renormalization renormalize(const SurfaceModel& s, const GroupElement& r);

}  // namespace ersurf
