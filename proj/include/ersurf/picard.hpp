#pragma once

#include <map>
#include <optional>
#include <string>

#include "ersurf/group.hpp"

namespace ersurf {

/// Finite formal sum of points of X with nonzero integer multiplicities.
class Divisor {
public:
    explicit Divisor(CurveGroup group) : group_(group) {}

    static Divisor point(const GroupElement& p, int multiplicity = 1);

    const CurveGroup& group() const noexcept { return group_; }
    const std::map<GroupElement, int>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    int degree() const;

    /// Adds `multiplicity` copies of p; terms that cancel are dropped.
    Divisor& add(const GroupElement& p, int multiplicity);
    Divisor& operator+=(const Divisor& o);
    Divisor operator+(const Divisor& o) const;
    Divisor operator-() const;

    friend bool operator==(const Divisor&, const Divisor&) = default;

private:
    CurveGroup group_;
    std::map<GroupElement, int> terms_;
};

/**
 * A class in Pic(X). On a genus-1 curve two divisors are linearly
 * equivalent iff they share degree and Abel sum, so (degree, abel) is a
 * canonical form. The Abel map is based at the group identity.
 */
class DivisorClass {
public:
    DivisorClass(int degree, GroupElement abel) : degree_(degree), abel_(abel) {}

    static DivisorClass trivial(const CurveGroup& g) { return {0, g.zero()}; }
    /// The class of a single point P.
    static DivisorClass point(const GroupElement& p) { return {1, p}; }

    int degree() const noexcept { return degree_; }
    const GroupElement& abel() const noexcept { return abel_; }
    const CurveGroup& group() const noexcept { return abel_.group(); }
    bool is_trivial() const noexcept { return degree_ == 0 && abel_.is_zero(); }

    DivisorClass operator+(const DivisorClass& o) const { return {degree_ + o.degree_, abel_ + o.abel_}; }
    DivisorClass operator-(const DivisorClass& o) const { return {degree_ - o.degree_, abel_ - o.abel_}; }
    DivisorClass operator-() const { return {-degree_, -abel_}; }
    DivisorClass operator+(const GroupElement& p) const { return *this + point(p); }
    DivisorClass operator-(const GroupElement& p) const { return *this - point(p); }
    DivisorClass times(int k) const { return {k * degree_, group().multiply(k, abel_)}; }

    /// "(d, (i,j))".
    std::string to_string() const;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

private:
    int degree_;
    GroupElement abel_;
};

DivisorClass class_of(const Divisor& d);

/// Riemann-Roch on a genus-1 curve.
int h0(const DivisorClass& c);
/// Serre duality with trivial canonical class: h1(c) = h0(-c).
int h1(const DivisorClass& c);
inline bool is_nonspecial(const DivisorClass& c) { return h1(c) == 0; }

bool is_bpf_curve(const DivisorClass& c);
bool is_very_ample_curve(const DivisorClass& c);

/// Base locus of the complete linear system |c| on X.
struct CurveBaseLocus {
    enum class Kind { None, SinglePoint, Everything };
    Kind kind = Kind::None;
    std::optional<GroupElement> point;  // set iff kind == SinglePoint

    bool empty() const noexcept { return kind == Kind::None; }
};

/// Degree >= 2 or trivial: free. Degree 1: the unique point P ~ c. Otherwise
/// |c| is empty and every point is (vacuously) a base point.
CurveBaseLocus base_locus(const DivisorClass& c);

}  // namespace ersurf
