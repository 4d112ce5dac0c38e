#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "surgcalc/numbers.hpp"
#include "surgcalc/slope.hpp"

namespace surgcalc {

/// Lens space L(p, q), normalized to p >= 0 and 0 <= q < p.
/// Conventional extremes: L(0,1) = S^1 x S^2 and L(1,0) = S^3.
///
/// Orientation convention (fixed to make the surgery examples reproduce
/// verbatim): (-p/q)-surgery along the unknot yields L(p, q). Some texts use
/// +p/q instead; all outputs of this module are relative to this choice.
class LensSpace {
public:
    LensSpace(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_ < 0) throw std::invalid_argument("lens space needs p >= 0");
        if (p_ == 0) {
            q_ = 1;  // S^1 x S^2
        } else {
            q_ %= p_;
            if (q_ < 0) q_ += p_;
        }
        if (p_ >= 2 && gcd(p_, q_) != 1)
            throw std::invalid_argument("lens space L(" + p_.str() + "," + q_.str() +
                                        ") needs gcd(p,q) = 1");
    }

    static LensSpace s3() { return LensSpace(1, 0); }
    static LensSpace s1_x_s2() { return LensSpace(0, 1); }

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    bool is_s3() const { return p_ == 1; }
    bool is_s1_x_s2() const { return p_ == 0; }

    friend bool operator==(const LensSpace&, const LensSpace&) = default;

    std::string to_string() const {
        if (is_s3()) return "S^3";
        if (is_s1_x_s2()) return "S^1 x S^2";
        return "L(" + p_.str() + "," + q_.str() + ")";
    }

private:
    Int p_;
    Int q_;
};

/// The manifold of a single unknot surgery with the given topological slope.
/// Meridional slope (coefficient infinity) is the trivial surgery: S^3.
inline LensSpace lens_from_unknot_surgery(const Slope& topological) {
    if (topological.is_meridian()) return LensSpace::s3();
    // write the coefficient as -p/q with p >= 0; slopes are stored with q > 0
    if (topological.p() <= 0) return LensSpace(-topological.p(), topological.q());
    return LensSpace(topological.p(), -topological.q());
}

inline LensSpace lens_from_unknot_surgery(const Rational& topological) {
    return lens_from_unknot_surgery(Slope::from_coefficient(topological));
}

namespace detail {

// q' is a unit mod p; its inverse exists whenever p >= 2 and gcd(q', p) = 1
inline Int mod_inverse(const Int& q, const Int& p) {
    Int old_r = q % p, r = p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        const Int quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_s -= quot * s;
        std::swap(old_s, s);
    }
    Int inv = old_s % p;
    if (inv < 0) inv += p;
    return inv;
}

}  // namespace detail

/// Classification of lens spaces: L(p,q) and L(p,q') are orientation
/// preserving homeomorphic iff q' = q^{+-1} (mod p); allowing orientation
/// reversal adds q' = -q^{+-1} (mod p).
inline bool lens_homeomorphic(const LensSpace& a, const LensSpace& b, bool orientation_preserving) {
    if (a.p() != b.p()) return false;
    const Int& p = a.p();
    if (p == 0 || p == 1) return true;
    const Int q = a.q();
    const Int inv = detail::mod_inverse(q, p);
    if (b.q() == q || b.q() == inv) return true;
    if (orientation_preserving) return false;
    const Int neg = (p - q) % p;
    const Int neg_inv = (p - inv) % p;
    return b.q() == neg || b.q() == neg_inv;
}

struct SpineSwapSymmetry {
    bool or_preserving = false;  // q^2 = +1 (mod p)
    bool or_reversing = false;   // q^2 = -1 (mod p)
};

/// Whether a homeomorphism of L(p,q) can interchange the two Heegaard spines.
inline SpineSwapSymmetry spine_swap_symmetry(const LensSpace& s) {
    if (s.p() < 2) throw std::invalid_argument("spine_swap_symmetry needs p >= 2");
    const Int sq = (s.q() * s.q()) % s.p();
    return SpineSwapSymmetry{sq == 1 % s.p(), sq == (s.p() - 1) % s.p()};
}

/// Homology class on a torus, written in the (mu, lambda) basis.
struct TorusClass {
    Int mu;
    Int lambda;

    friend bool operator==(const TorusClass&, const TorusClass&) = default;
    std::string to_string() const { return "(" + mu.str() + ", " + lambda.str() + ")"; }
};

/// Algebraic intersection number with the convention mu . lambda = +1.
inline Int intersection_pairing(const TorusClass& u, const TorusClass& v) {
    return u.mu * v.lambda - u.lambda * v.mu;
}

/// Boundary gluing of two solid tori, as images of (mu_1, lambda_1) in the
/// (mu_2, lambda_2) basis.
struct GluingMap {
    TorusClass mu_image;
    TorusClass lambda_image;

    TorusClass image(const TorusClass& c) const {
        return TorusClass{c.mu * mu_image.mu + c.lambda * lambda_image.mu,
                          c.mu * mu_image.lambda + c.lambda * lambda_image.lambda};
    }

    /// Determinant of the induced map of oriented boundary tori. The
    /// (mu_2, lambda_2) coordinates are written in the orientation induced
    /// from the first torus; as the boundary of its own solid torus the
    /// second torus carries the opposite one, hence the sign flip. A gluing
    /// that closes up an oriented manifold comes out as -1.
    Int determinant() const {
        return -(mu_image.mu * lambda_image.lambda - mu_image.lambda * lambda_image.mu);
    }
};

/// True when the gluing carries the contact longitude lambda_1 + n mu_1 to
/// +-(lambda_2 + n mu_2); this is the condition for the tight structures on
/// the two standard neighborhoods to fit together.
inline bool maps_contact_longitude(const GluingMap& g, const Int& tb) {
    const TorusClass img = g.image(TorusClass{tb, 1});
    const TorusClass target{tb, 1};
    return (img == target) || (img == TorusClass{-target.mu, -target.lambda});
}

struct GluingResult {
    LensSpace lens;
    GluingMap gluing;
    Int recovered_q;      // the q with mu_1 -> -q mu_2 + p lambda_2
    Rational tbq_spine1;  // rational tb of the spine of the first torus
    Rational tbq_spine2;
};

/// Glue two standard neighborhoods of a Legendrian knot with tb = n along
/// their boundaries so the contact longitudes match. The result is the lens
/// space L(p, p-1); the two spines have rational tb of +1/p and -1/p, so
/// they are never Legendrian equivalent even though they are topologically.
inline GluingResult glue_standard_neighborhoods(const Int& tb, const Int& p) {
    if (p < 2) throw std::invalid_argument("glue_standard_neighborhoods needs p >= 2");
    const Int& n = tb;

    const GluingMap g{TorusClass{1 + p * n, p}, TorusClass{-p * n * n, 1 - p * n}};

    // mu_1 -> -q mu_2 + p lambda_2 together with the contact-longitude
    // condition forces q = -pn - 1
    const Int q = -g.mu_image.mu;
    const Int r = g.lambda_image.mu;
    const Int s = g.lambda_image.lambda;
    if (-q * s - p * r != 1) throw std::logic_error("gluing does not satisfy -qs - pr = 1");
    if (abs(g.determinant()) != 1) throw std::logic_error("gluing is not a boundary homeomorphism");
    if (!maps_contact_longitude(g, n))
        throw std::logic_error("gluing does not carry the contact longitude to the contact longitude");

    // extended Seifert longitude of the spine K_2: the image of mu_1, the
    // class bounding in the exterior V_1, oriented so that mu_2 . r_2 = p
    TorusClass r2 = g.mu_image;
    if (intersection_pairing(TorusClass{1, 0}, r2) < 0) r2 = TorusClass{-r2.mu, -r2.lambda};

    // and of K_1: the image of mu_2 under the inverse gluing, same sign rule
    const Int det_raw = g.mu_image.mu * g.lambda_image.lambda - g.mu_image.lambda * g.lambda_image.mu;
    // inverse of [[a,c],[b,d]] scaled by det_raw = +-1
    TorusClass r1{det_raw * g.lambda_image.lambda, det_raw * -g.mu_image.lambda};
    if (intersection_pairing(TorusClass{1, 0}, r1) < 0) r1 = TorusClass{-r1.mu, -r1.lambda};

    const TorusClass contact{n, 1};  // lambda + n mu on either side
    const Rational tbq1(intersection_pairing(contact, r1), p);
    const Rational tbq2(intersection_pairing(contact, r2), p);

    return GluingResult{LensSpace(p, q), g, q, tbq1, tbq2};
}

struct CosmeticPairReport {
    Rational contact1, contact2;
    Rational topological1, topological2;
    LensSpace lens1, lens2;
    bool oriented_homeomorphic = false;
    bool homeomorphic = false;  // allowing orientation reversal
};

/// Topological shadow of a pair of contact surgeries along a tb-decorated
/// unknot: convert both coefficients, identify the two lens spaces, and
/// report whether they agree as (un)oriented manifolds.
inline CosmeticPairReport cosmetic_pair_check(const Rational& c1, const Rational& c2, const Int& tb) {
    const Rational t1 = c1 + Rational(tb);
    const Rational t2 = c2 + Rational(tb);
    const LensSpace l1 = lens_from_unknot_surgery(t1);
    const LensSpace l2 = lens_from_unknot_surgery(t2);
    return CosmeticPairReport{c1,
                              c2,
                              t1,
                              t2,
                              l1,
                              l2,
                              lens_homeomorphic(l1, l2, true),
                              lens_homeomorphic(l1, l2, false)};
}

}  // namespace surgcalc
