#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ersurf/surface.hpp"

namespace ersurf {

/**
 * Where the center x of an elementary transformation lies.
 *   Decomposable: OnX0(P), OnX1(P), Generic(P) (on Pf, off X0 and X1)
 *   Indec0:       OnX0(P), Generic(P)
 *   IndecMinus1:  Pair{q, r}, the point D_q ∩ D_r; q == r is a focal point.
 */
class PointSpec {
public:
    enum class Kind { OnX0, OnX1, Generic, Pair };

    static PointSpec on_x0(const GroupElement& p) { return {Kind::OnX0, p, p}; }
    static PointSpec on_x1(const GroupElement& p) { return {Kind::OnX1, p, p}; }
    static PointSpec generic(const GroupElement& p) { return {Kind::Generic, p, p}; }
    /// Stored unordered (smaller element first).
    static PointSpec pair(const GroupElement& q, const GroupElement& r) {
        return q <= r ? PointSpec{Kind::Pair, q, r} : PointSpec{Kind::Pair, r, q};
    }

    Kind kind() const noexcept { return kind_; }
    /// P for the fiber kinds, q for Pair.
    const GroupElement& point() const noexcept { return a_; }
    const GroupElement& q() const noexcept { return a_; }
    const GroupElement& r() const noexcept { return b_; }
    bool is_focal() const noexcept { return kind_ == Kind::Pair && a_ == b_; }

    /// The base point of the fiber through x: P, or T = q + r - p0 for pairs.
    GroupElement fiber(const SurfaceModel& s) const;

    /// "onX0@(i,j)", "onX1@(i,j)", "gen@(i,j)", "pair{(i,j),(k,l)}".
    std::string to_string() const;

    friend bool operator==(const PointSpec&, const PointSpec&) = default;

private:
    PointSpec(Kind k, GroupElement a, GroupElement b) : kind_(k), a_(a), b_(b) {}

    Kind kind_;
    GroupElement a_;
    GroupElement b_;
};

/// The fourteen branches of the transformation rule table.
enum class ElmRule {
    DecHighOnX0,         // e >= 2, x in X0          -> 𝔢 - P
    DecHighOffX0,        // e >= 2, x not in X0      -> 𝔢 + P
    DecOneOnX0,          // e = 1, x in X0           -> 𝔢 - P
    DecOneOffX0,         // e = 1, x not in X0, 𝔢 ≁ -P -> 𝔢 + P
    DecOneOnX1Special,   // e = 1, x in X1, 𝔢 ~ -P   -> X x P^1
    DecOneGenSpecial,    // e = 1, generic, 𝔢 ~ -P   -> Indec0
    DecZeroOnX0,         // e = 0, 𝔢 ≁ 0, x in X0    -> 𝔢 - P
    DecZeroOnX1,         // e = 0, 𝔢 ≁ 0, x in X1    -> -𝔢 - P
    DecZeroGen,          // e = 0, 𝔢 ≁ 0, generic    -> IndecMinus1(𝔢 + P)
    DecProduct,          // 𝔢 ~ 0, any x             -> -P
    Ind0OnX0,            //                          -> Dec(-P)
    Ind0Gen,             //                          -> IndecMinus1(P)
    IndM1Focal,          // Pair{q, q}               -> Indec0
    IndM1Split,          // Pair{q, r}, q != r       -> Dec(q - r)
};
inline constexpr std::size_t kElmRuleCount = 14;
std::string_view rule_name(ElmRule r) noexcept;

/// Which curve of the new surface plays the role of the minimal section.
enum class Y0Note { X0prime, X1prime, DRprime };
std::string_view y0_name(Y0Note n) noexcept;

struct ElmResult {
    SurfaceModel model;
    DivisorClass e_class_new;
    Y0Note y0_note;
    ElmRule rule;
    GroupElement fiber;  // P (or T) of the center's fiber
};

/// Throws InvalidPointSpec when x is not a point description for s's family.
ElmResult elm(const SurfaceModel& s, const PointSpec& x);

/// Self-intersection of the strict transform of a unisecant curve D:
/// D^2 - 1 if D passes through the center, D^2 + 1 otherwise.
int transport_unisecant(const SurfaceModel& s, const PointSpec& x, const SurfaceDivisorClass& d,
                        bool passes_through);

/**
 * |ν*C + 𝔞f| on the transformed surface corresponds to |C + (𝔞 + mP)f - m x|
 * on the source. The filtration lists (𝔞 + kP, k) for k = 0..m.
 */
struct SystemCorrespondence {
    struct Step {
        DivisorClass fiber_class;
        int multiplicity;
    };
    int secancy;
    DivisorClass fiber_class;
    int multiplicity;
    std::vector<Step> filtration;

    std::string to_string() const;  // "2X0+(2, (1,0))f - 2x"
};
SystemCorrespondence system_correspondence(int secancy, const DivisorClass& a, const GroupElement& p);

// --- walks ----------------------------------------------------------------

/// A step that is resolved against the current surface at walk time.
struct RandomStep {
    enum class Kind { OnX0, OnX1, Generic, Focal, Pair, Any };
    /// Constraint on the fiber relative to the previous step's fiber.
    enum class Relation { Any, SameAsPrevious, DistinctFromPrevious };
    Kind kind = Kind::Any;
    Relation relation = Relation::Any;
    friend bool operator==(const RandomStep&, const RandomStep&) = default;
};

using StepTemplate = std::variant<PointSpec, RandomStep>;

/// A fixed PointSpec prints as itself; random steps as "<kind>@<relation>",
/// e.g. "gen@any", "onX0@same", "focal@new".
std::string to_string(const StepTemplate& t);

struct Trajectory {
    std::vector<SurfaceModel> models;  // steps + 1 entries
    std::vector<PointSpec> points;
    std::vector<ElmResult> results;
};

/**
 * Applies the templates in order. Random steps draw from a std::mt19937_64
 * seeded with `seed`. On IndecMinus1 a Generic step means a non-focal pair
 * and Focal a diagonal pair. Errors from elm propagate; InvalidPointSpec is
 * also raised when a relation cannot be met.
 */
Trajectory walk(const SurfaceModel& s0, const std::vector<StepTemplate>& steps, std::uint64_t seed);

/// Resolves one template against s given the previous fiber (if any).
PointSpec resolve_step(const SurfaceModel& s, const StepTemplate& t, const std::optional<GroupElement>& prev,
                       std::mt19937_64& rng);

}  // namespace ersurf
