#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "surgcalc/numbers.hpp"

namespace surgcalc {

/// Surgery slope p*mu + q*lambda as a coprime pair, stored normalized:
/// q >= 0, and the meridian (coefficient infinity) is exactly (1, 0).
/// (p, q) and (-p, -q) describe the same slope and normalize identically.
class Slope {
public:
    Slope(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_ == 0 && q_ == 0) throw std::invalid_argument("slope (0,0) is not a curve");
        const Int g = gcd(abs(p_), abs(q_));
        if (g > 1) {
            p_ /= g;
            q_ /= g;
        }
        if (q_ < 0 || (q_ == 0 && p_ < 0)) {
            p_ = -p_;
            q_ = -q_;
        }
    }

    static Slope meridian() { return Slope(1, 0); }

    /// Slope of the topological coefficient p/q (finite).
    static Slope from_coefficient(const Rational& r) { return Slope(r.num(), r.den()); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }

    /// Coefficient infinity: the trivial surgery slope mu.
    bool is_meridian() const { return q_ == 0; }

    Rational coefficient() const {
        if (is_meridian()) throw std::domain_error("meridional slope has no finite coefficient");
        return Rational(p_, q_);
    }

    friend bool operator==(const Slope& a, const Slope& b) = default;

    std::string to_string() const { return is_meridian() ? "inf" : Rational(p_, q_).to_string(); }

private:
    Int p_;
    Int q_;
};

inline Slope normalize_slope(Int p, Int q) { return Slope(std::move(p), std::move(q)); }

}  // namespace surgcalc
