#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ersurf/elmtrans.hpp"

namespace ersurf {

enum class ScrollTag {
    DegenerateLine,
    DoubleQuadric,
    DoublePlane,
    TriplePlane,
    Cone,
    DecScrollDirectrixLine,
    DecScrollTwoLines,
    DecScrollSmooth,
    Ind0Quartic,
    Ind0Smooth,
    IndM1Smooth,
};

enum class SingularLocus { Empty, Vertex, DoubleLine, TwoDisjointLines, DirectrixLine };

enum class Correspondence { OneOne, OneTwo, TwoTwo };

struct Generation {
    int left_degree = 0;
    int right_degree = 0;
    Correspondence correspondence = Correspondence::OneOne;
    int united_points = 0;
    friend bool operator==(const Generation&, const Generation&) = default;
};

enum class FamilyKind { X0, X1, Band, Hyperplane };

enum class FamilyNote { None, HyperplaneSections, UniqueDirectrix, OneDimensionalFamily, Vertex };

/// When φ(D) is linearly normal, as a function of 𝔞.
struct Normality {
    enum class Mode { Always, Never, UpTo, Exactly, NotApplicable };
    Mode mode = Mode::Always;
    int deg = 0;                 // bound for UpTo / value for Exactly
    bool excludes_b = false;     // UpTo also requires 𝔞 ≁ 𝔟
    friend bool operator==(const Normality&, const Normality&) = default;
};

/// Unisecant curves D ~ X0 + 𝔞f with deg 𝔞 >= min_deg_a; image degree deg 𝔞 + degree_offset.
struct UnisecantFamily {
    FamilyKind kind = FamilyKind::Band;
    int min_deg_a = 0;
    int degree_offset = 0;
    Normality normality;
    FamilyNote note = FamilyNote::None;

    int curve_degree(int deg_a) const { return deg_a + degree_offset; }
    bool linearly_normal(const DivisorClass& a, const DivisorClass& b) const;

    friend bool operator==(const UnisecantFamily&, const UnisecantFamily&) = default;
};

struct ScrollModel {
    ScrollTag tag = ScrollTag::DecScrollSmooth;
    SurfaceFamily family = SurfaceFamily::Decomposable;
    int e = 0;
    int b = 0;
    bool e_trivial = false;   // 𝔢 ~ 0
    bool b_minus_e = false;   // 𝔟 ~ -𝔢
    bool birational = true;
    int map_degree = 1;
    int scroll_degree = 0;
    int ambient = 0;
    int speciality = 0;
    SingularLocus singular_locus = SingularLocus::Empty;
    std::optional<Generation> generation;
    std::vector<UnisecantFamily> families;

    friend bool operator==(const ScrollModel&, const ScrollModel&) = default;
};

std::string_view tag_name(ScrollTag t) noexcept;
std::string_view singular_name(SingularLocus s) noexcept;
std::string_view correspondence_name(Correspondence c) noexcept;
std::string_view family_kind_name(FamilyKind k) noexcept;
std::string_view note_name(FamilyNote n) noexcept;
std::string_view normality_name(Normality::Mode m) noexcept;

/// Image of φ_{|X0 + 𝔟f|}. Throws NotBasePointFree when the system has base points.
ScrollModel classify_scroll(const SurfaceModel& s, const DivisorClass& b);

/// Every scroll class with ambient space exactly P^N, ordered by e, then
/// surface family (indecomposable, X x P^1, other decomposable), then deg 𝔟.
/// Representatives live on `group`, which needs a nonzero element.
std::vector<ScrollModel> emit_table(int n, const CurveGroup& group = CurveGroup::torus(12, 12));

/// Fixed-width text rendering of emit_table rows.
std::string render_table(int n, const std::vector<ScrollModel>& rows);

// --- construction from X x P^1 -------------------------------------------

struct NagataTarget {
    enum class Kind { DecTrivial, DecZero, DecOne, DecHigh, Indec0, IndecMinus1 };
    Kind kind = Kind::DecTrivial;
    int e = 0;  // only read for DecHigh (e >= 2)

    /// Whether `s` belongs to this family.
    bool matches(const SurfaceModel& s) const;
    std::string to_string() const;
    friend bool operator==(const NagataTarget&, const NagataTarget&) = default;
};

struct NagataPlan {
    NagataTarget target;
    std::vector<StepTemplate> steps;
    int length = 0;
};

NagataPlan nagata_plan(const NagataTarget& target);

/// Executes the plan from X x P^1 over `group`.
Trajectory execute_plan(const NagataPlan& plan, const CurveGroup& group, std::uint64_t seed);

/// Breadth-first search from X x P^1 over every concrete PointSpec. Returns
/// the least number of transformations reaching the target, or -1 when none
/// of length <= max_len does. max_len above 4 throws PreconditionViolated.
int minimality_check(const NagataTarget& target, int max_len, const CurveGroup& group);

/// Every concrete point description on s.
std::vector<PointSpec> all_point_specs(const SurfaceModel& s);

}  // namespace ersurf
