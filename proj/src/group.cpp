#include "ersurf/group.hpp"

#include <algorithm>
#include <ostream>

#include "ersurf/errors.hpp"

namespace ersurf {
namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t v, std::int64_t p) {
    std::int64_t a = mod(v, p), m = p, x0 = 0, x1 = 1;
    while (a > 1) {
        std::int64_t q = a / m;
        std::int64_t t = m;
        m = a % m;
        a = t;
        t = x0;
        x0 = x1 - q * x0;
        x1 = t;
    }
    return mod(x1, p);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// roots[v] lists the square roots of v in F_p (0, 1 or 2 of them, ascending).
std::vector<std::vector<std::int64_t>> square_roots(std::int64_t p) {
    std::vector<std::vector<std::int64_t>> roots(static_cast<std::size_t>(p));
    for (std::int64_t y = 0; y < p; ++y) roots[static_cast<std::size_t>(y * y % p)].push_back(y);
    return roots;
}

}  // namespace

CurveGroup CurveGroup::torus(int m, int n) {
    if (m < 1 || n < 1)
        throw Error(ErrorCode::InvalidModel, "torus factors must be positive");
    return CurveGroup(Kind::Torus, m, n, 0);
}

CurveGroup CurveGroup::weierstrass(int p, int a, int b) {
    if (p < 5 || !is_prime(p) || p > 46337)
        throw Error(ErrorCode::InvalidModel, "weierstrass model needs a prime 5 <= p <= 46337");
    std::int64_t ra = mod(a, p), rb = mod(b, p);
    std::int64_t disc = mod(4 * (ra * ra % p) * ra + 27 * (rb * rb % p), p);
    if (disc == 0)
        throw Error(ErrorCode::InvalidModel, "singular curve: 4a^3 + 27b^2 = 0 mod p");
    return CurveGroup(Kind::Weierstrass, p, static_cast<int>(ra), static_cast<int>(rb));
}

GroupElement CurveGroup::zero() const {
    if (is_torus()) return GroupElement(*this, 0, 0, false);
    return GroupElement(*this, 0, 0, true);
}

bool CurveGroup::on_curve(std::int64_t x, std::int64_t y) const {
    if (is_torus()) return true;
    const std::int64_t p = params_[0];
    x = mod(x, p);
    y = mod(y, p);
    std::int64_t rhs = mod((x * x % p) * x + params_[1] * x + params_[2], p);
    return y * y % p == rhs;
}

GroupElement CurveGroup::element(std::int64_t x, std::int64_t y) const {
    if (is_torus()) return GroupElement(*this, mod(x, params_[0]), mod(y, params_[1]), false);
    if (!on_curve(x, y))
        throw Error(ErrorCode::InvalidModel,
                    "(" + std::to_string(x) + "," + std::to_string(y) + ") is not on " + describe());
    return GroupElement(*this, mod(x, params_[0]), mod(y, params_[0]), false);
}

void CurveGroup::check_member(const GroupElement& g) const {
    if (!(g.group() == *this))
        throw Error(ErrorCode::MixedGroups,
                    "element of " + g.group().describe() + " used with " + describe());
}

GroupElement CurveGroup::add(const GroupElement& g, const GroupElement& h) const {
    check_member(g);
    check_member(h);
    if (is_torus())
        return GroupElement(*this, (g.x_ + h.x_) % params_[0], (g.y_ + h.y_) % params_[1], false);

    if (g.infinity_) return h;
    if (h.infinity_) return g;
    const std::int64_t p = params_[0];
    std::int64_t slope;
    if (g.x_ == h.x_) {
        if (mod(g.y_ + h.y_, p) == 0) return zero();
        // tangent: (3x^2 + a) / 2y
        slope = mod((3 * (g.x_ * g.x_ % p) + params_[1]) % p * inverse_mod(2 * g.y_, p), p);
    } else {
        slope = mod(mod(h.y_ - g.y_, p) * inverse_mod(h.x_ - g.x_, p), p);
    }
    std::int64_t x3 = mod(slope * slope - g.x_ - h.x_, p);
    std::int64_t y3 = mod(slope * mod(g.x_ - x3, p) - g.y_, p);
    return GroupElement(*this, x3, y3, false);
}

GroupElement CurveGroup::negate(const GroupElement& g) const {
    check_member(g);
    if (is_torus())
        return GroupElement(*this, mod(-g.x_, params_[0]), mod(-g.y_, params_[1]), false);
    if (g.infinity_) return g;
    return GroupElement(*this, g.x_, mod(-g.y_, params_[0]), false);
}

GroupElement CurveGroup::sub(const GroupElement& g, const GroupElement& h) const {
    return add(g, negate(h));
}

GroupElement CurveGroup::multiply(std::int64_t k, const GroupElement& g) const {
    check_member(g);
    if (is_torus())
        return GroupElement(*this, mod(mod(k, params_[0]) * g.x_, params_[0]),
                            mod(mod(k, params_[1]) * g.y_, params_[1]), false);
    GroupElement base = k < 0 ? negate(g) : g;
    std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    GroupElement acc = zero();
    while (n) {
        if (n & 1U) acc = add(acc, base);
        base = add(base, base);
        n >>= 1U;
    }
    return acc;
}

std::vector<GroupElement> CurveGroup::halvings(const GroupElement& s) const {
    check_member(s);
    std::vector<GroupElement> out;
    if (is_torus()) {
        // 2i = s_i (mod m) has gcd(2, m) solutions when gcd(2, m) | s_i.
        auto solve = [](std::int64_t target, std::int64_t m) {
            std::vector<std::int64_t> sols;
            for (std::int64_t i = 0; i < m; ++i)
                if ((2 * i) % m == target) sols.push_back(i);
            return sols;
        };
        auto xs = solve(s.x_, params_[0]);
        auto ys = solve(s.y_, params_[1]);
        for (auto xi : xs)
            for (auto yi : ys) out.push_back(GroupElement(*this, xi, yi, false));
        return out;
    }
    for (const auto& r : enumerate(static_cast<std::size_t>(-1)))
        if (add(r, r) == s) out.push_back(r);
    return out;
}

std::vector<GroupElement> CurveGroup::two_torsion() const { return halvings(zero()); }

std::size_t CurveGroup::order() const {
    if (is_torus()) return static_cast<std::size_t>(params_[0]) * static_cast<std::size_t>(params_[1]);
    const std::int64_t p = params_[0];
    auto roots = square_roots(p);
    std::size_t count = 1;
    for (std::int64_t x = 0; x < p; ++x)
        count += roots[static_cast<std::size_t>(mod((x * x % p) * x + params_[1] * x + params_[2], p))].size();
    return count;
}

std::vector<GroupElement> CurveGroup::enumerate(std::size_t cap) const {
    const std::size_t n = order();
    if (n > cap)
        throw Error(ErrorCode::GroupTooLarge, describe() + " has " + std::to_string(n) +
                                                  " elements, above the enumeration cap " +
                                                  std::to_string(cap));
    std::vector<GroupElement> out;
    out.reserve(n);
    if (is_torus()) {
        for (std::int64_t i = 0; i < params_[0]; ++i)
            for (std::int64_t j = 0; j < params_[1]; ++j) out.push_back(GroupElement(*this, i, j, false));
        return out;
    }
    const std::int64_t p = params_[0];
    auto roots = square_roots(p);
    out.push_back(zero());
    for (std::int64_t x = 0; x < p; ++x)
        for (auto y : roots[static_cast<std::size_t>(mod((x * x % p) * x + params_[1] * x + params_[2], p))])
            out.push_back(GroupElement(*this, x, y, false));
    return out;
}

std::string CurveGroup::describe() const {
    if (is_torus())
        return "Torus(" + std::to_string(params_[0]) + "," + std::to_string(params_[1]) + ")";
    return "Weierstrass(p=" + std::to_string(params_[0]) + ",a=" + std::to_string(params_[1]) +
           ",b=" + std::to_string(params_[2]) + ")";
}

bool GroupElement::is_zero() const noexcept {
    return group_.is_torus() ? (x_ == 0 && y_ == 0) : infinity_;
}

std::string GroupElement::to_string() const {
    if (infinity_) return "O";
    return "(" + std::to_string(x_) + "," + std::to_string(y_) + ")";
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << g.to_string(); }

}  // namespace ersurf
