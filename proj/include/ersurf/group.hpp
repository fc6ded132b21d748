#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ersurf {

class GroupElement;

inline constexpr std::size_t kDefaultEnumerationCap = 10000;

/**
 * Finite abelian group standing in for the point group of the base elliptic
 * curve X. Two variants:
 *   - Torus(m, n):        Z/m x Z/n, elements are residue pairs (i, j).
 *   - Weierstrass(p,a,b): rational points of y^2 = x^3 + ax + b over F_p
 *                         (p >= 5 prime, nonsingular), identity at infinity.
 *
 * CurveGroup is a small immutable value. Two groups are the same group iff
 * their variant and parameters agree.
 */
class CurveGroup {
public:
    enum class Kind : std::uint8_t { Torus, Weierstrass };

    static CurveGroup torus(int m, int n);
    static CurveGroup weierstrass(int p, int a, int b);

    Kind kind() const noexcept { return kind_; }
    bool is_torus() const noexcept { return kind_ == Kind::Torus; }

    // Torus: (m, n, 0). Weierstrass: (p, a, b).
    int param(int i) const noexcept { return params_[i]; }

    GroupElement zero() const;

    /// Torus coordinates are reduced mod (m, n); Weierstrass coordinates are
    /// reduced mod p and must satisfy the curve equation.
    GroupElement element(std::int64_t x, std::int64_t y) const;
    bool on_curve(std::int64_t x, std::int64_t y) const;

    GroupElement add(const GroupElement& g, const GroupElement& h) const;
    GroupElement negate(const GroupElement& g) const;
    GroupElement sub(const GroupElement& g, const GroupElement& h) const;
    GroupElement multiply(std::int64_t k, const GroupElement& g) const;

    /// All r with r + r == s, in element order.
    std::vector<GroupElement> halvings(const GroupElement& s) const;
    std::vector<GroupElement> two_torsion() const;

    /// Every element exactly once, lexicographic on coordinates (identity
    /// first for Weierstrass). Throws GroupTooLarge above `cap`.
    std::vector<GroupElement> enumerate(std::size_t cap = kDefaultEnumerationCap) const;
    std::size_t order() const;

    std::string describe() const;

    friend bool operator==(const CurveGroup&, const CurveGroup&) = default;

private:
    CurveGroup(Kind kind, int p0, int p1, int p2) : kind_(kind), params_{p0, p1, p2} {}

    void check_member(const GroupElement& g) const;

    Kind kind_;
    int params_[3];
};

/// A point of X, tagged with the group it belongs to.
class GroupElement {
public:
    const CurveGroup& group() const noexcept { return group_; }
    std::int64_t x() const noexcept { return x_; }
    std::int64_t y() const noexcept { return y_; }
    bool is_infinity() const noexcept { return infinity_; }
    bool is_zero() const noexcept;

    /// "(i,j)" or "O" for the Weierstrass point at infinity.
    std::string to_string() const;

    GroupElement operator+(const GroupElement& o) const { return group_.add(*this, o); }
    GroupElement operator-(const GroupElement& o) const { return group_.sub(*this, o); }
    GroupElement operator-() const { return group_.negate(*this); }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.group_ == b.group_ && a.infinity_ == b.infinity_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    /// Element order; only meaningful within one group.
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
        if (a.infinity_ != b.infinity_) return a.infinity_ ? std::strong_ordering::less
                                                            : std::strong_ordering::greater;
        if (auto c = a.x_ <=> b.x_; c != 0) return c;
        return a.y_ <=> b.y_;
    }

private:
    friend class CurveGroup;
    GroupElement(CurveGroup g, std::int64_t x, std::int64_t y, bool inf)
        : group_(g), x_(x), y_(y), infinity_(inf) {}

    CurveGroup group_;
    std::int64_t x_;
    std::int64_t y_;
    bool infinity_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

/// "O" for the identity of either model, otherwise "(i,j)".
inline std::string point_label(const GroupElement& g) { return g.is_zero() ? "O" : g.to_string(); }

}  // namespace ersurf
