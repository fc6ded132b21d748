#include "ersurf/picard.hpp"

#include "ersurf/errors.hpp"

namespace ersurf {

Divisor Divisor::point(const GroupElement& p, int multiplicity) {
    Divisor d(p.group());
    d.add(p, multiplicity);
    return d;
}

int Divisor::degree() const {
    int deg = 0;
    for (const auto& [p, k] : terms_) deg += k;
    return deg;
}

Divisor& Divisor::add(const GroupElement& p, int multiplicity) {
    if (!(p.group() == group_))
        throw Error(ErrorCode::MixedGroups, "point of " + p.group().describe() + " added to a divisor on " +
                                                group_.describe());
    if (multiplicity == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(p, 0);
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
    return *this;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [p, k] : o.terms_) add(p, k);
    return *this;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor out = *this;
    out += o;
    return out;
}

Divisor Divisor::operator-() const {
    Divisor out(group_);
    for (const auto& [p, k] : terms_) out.add(p, -k);
    return out;
}

std::string DivisorClass::to_string() const {
    return "(" + std::to_string(degree_) + ", " + point_label(abel_) + ")";
}

DivisorClass class_of(const Divisor& d) {
    const CurveGroup& g = d.group();
    GroupElement sum = g.zero();
    int deg = 0;
    for (const auto& [p, k] : d.terms()) {
        sum = sum + g.multiply(k, p);
        deg += k;
    }
    return {deg, sum};
}

int h0(const DivisorClass& c) {
    if (c.degree() >= 1) return c.degree();
    if (c.degree() == 0) return c.abel().is_zero() ? 1 : 0;
    return 0;
}

int h1(const DivisorClass& c) { return h0(-c); }

bool is_bpf_curve(const DivisorClass& c) { return c.is_trivial() || c.degree() >= 2; }

bool is_very_ample_curve(const DivisorClass& c) { return c.degree() >= 3; }

CurveBaseLocus base_locus(const DivisorClass& c) {
    if (c.degree() >= 2 || c.is_trivial()) return {};
    if (c.degree() == 1) return {CurveBaseLocus::Kind::SinglePoint, c.abel()};
    return {CurveBaseLocus::Kind::Everything, std::nullopt};
}

}  // namespace ersurf
