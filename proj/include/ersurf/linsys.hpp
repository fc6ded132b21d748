#pragma once

#include <optional>

#include "ersurf/surface.hpp"

namespace ersurf {

/// Summary of a complete linear system |mX0 + 𝔟f|, m in {1, 2}.
struct SystemAnalysis {
    int h0 = 0;
    int h1 = 0;
    bool bpf = false;
    bool very_ample = false;
    bool generic_irreducible = false;
    std::optional<bool> generic_smooth;
    std::optional<int> genus_generic;
    int degree = 0;               // H^2
    std::optional<int> ambient;   // h0 - 1 when h0 >= 1

    friend bool operator==(const SystemAnalysis&, const SystemAnalysis&) = default;
};

/**
 * h^0(O_S(mX0 + 𝔟f)). Exact for every m on decomposable surfaces (the
 * bundle splits) and for m <= 2 on the indecomposable ones; m >= 3 on an
 * indecomposable surface throws UnsupportedSecancy.
 */
int h0_surface(const SurfaceModel& s, const SurfaceDivisorClass& h);

/// Σ_{k=0}^{m} h0(𝔟 + k𝔢), an upper bound for h0_surface.
int h0_bound(const SurfaceModel& s, const SurfaceDivisorClass& h);

/// h1(𝔟 + m𝔢), valid when 𝔟, ..., 𝔟 + (m-1)𝔢 are nonspecial; otherwise
/// throws HypothesisNotMet.
int h1_surface(const SurfaceModel& s, const SurfaceDivisorClass& h);

/// h0 - χ; h2 vanishes for m >= 0 so this is the true h1 whenever h0 is known.
int speciality(const SurfaceModel& s, const SurfaceDivisorClass& h);

bool is_bpf(const SurfaceModel& s, const SurfaceDivisorClass& h);
bool is_very_ample(const SurfaceModel& s, const SurfaceDivisorClass& h);

struct Irreducibility {
    bool irreducible = false;
    std::optional<int> genus;  // set iff irreducible
};
Irreducibility generic_irreducible(const SurfaceModel& s, const SurfaceDivisorClass& h);

/**
 * Whether φ_{|X0+𝔟f|}(D) is linearly normal for an irreducible unisecant
 * D ~ X0 + 𝔞f. Decided by surjectivity of the trace
 *   H^0(O_S(H)) -> H^0(O_X(𝔞 + 𝔟 + 𝔢)),
 * i.e. h0(H) = h0(𝔞 + 𝔟 + 𝔢) + h0(𝔟 - 𝔞).
 * Throws PreconditionViolated when |H| has base points, or on decomposable
 * surfaces when 𝔟 ~ 0 or D is not an irreducible curve other than X0, X1.
 */
bool linearly_normal_image(const SurfaceModel& s, const DivisorClass& b, const DivisorClass& a);

/// Sufficient test for |H| free on P f: h0(H - Pf) = h0(H) - (m + 1).
bool bpf_on_generator_criterion(const SurfaceModel& s, const SurfaceDivisorClass& h, const GroupElement& p);

struct MSecantNecessary {
    /// Base points of |𝔟 + m𝔢|; each point P forces a base point X0 ∩ Pf.
    CurveBaseLocus bp_at_x0_fiber;
    /// Whether |𝔟 + m𝔢| is very ample; required for |H| to be very ample.
    bool b_me_very_ample = false;
};
MSecantNecessary necessary_conditions_msecant(const SurfaceModel& s, const SurfaceDivisorClass& h);

/// Requires m in {1, 2}.
SystemAnalysis analyze(const SurfaceModel& s, const SurfaceDivisorClass& h);

/// Classes 𝔟 + k𝔢 for k = 0..m-1 all nonspecial.
bool nonspecial_chain(const SurfaceModel& s, const SurfaceDivisorClass& h);

}  // namespace ersurf
