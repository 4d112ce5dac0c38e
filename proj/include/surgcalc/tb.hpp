#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "surgcalc/diagram.hpp"
#include "surgcalc/homology.hpp"
#include "surgcalc/numbers.hpp"

namespace surgcalc {

/// Thurston-Bennequin number after surgery: value = tb_old - framing, where
/// framing is f/k for the framing correction f and the homological order k.
/// Integer (k = 1) results still carry the exact Rational.
struct TbResult {
    Rational value;
    Int order;         // k from the nullhomology certificate
    Rational framing;  // f/k, the shift between old and new surface framing
};

/// r_top = r_cont + tb.
inline Rational contact_to_topological(const Rational& contact, const Int& tb) {
    return contact + Rational(tb);
}

/// r_cont = r_top - tb.
inline Rational topological_to_contact(const Rational& topological, const Int& tb) {
    return topological - Rational(tb);
}

/// The framing correction f = <a, (q_1 l_10, ..., q_n l_n0)> for a witness a.
/// Well-defined on witnesses of the same order: any two differ by a kernel
/// element, which this pairing annihilates.
inline Int framing_correction(const SurgeryDiagram& d, const AuxKnot& aux, const IntVector& witness) {
    require_aux_matches(d, aux);
    if (witness.size() != d.size())
        throw std::invalid_argument("framing_correction: witness length mismatch");
    Int f = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        f += witness[i] * d.component(i).topological.q() * aux.linking[i];
    return f;
}

/// tb of the auxiliary knot in the surgered manifold, defined when the knot
/// stays nullhomologous (order k = 1). The certificate is recomputed here
/// rather than accepted from the caller, so a stale witness cannot leak in.
inline std::optional<TbResult> tb_after_surgery(const SurgeryDiagram& d, const AuxKnot& aux) {
    const auto cert = nullhomology(d, aux);
    if (!cert || !cert->nullhomologous()) return std::nullopt;
    const Int f = framing_correction(d, aux, cert->witness);
    return TbResult{Rational(aux.tb_old - f), Int(1), Rational(f)};
}

/// Rational tb for rationally nullhomologous auxiliary knots:
/// tb_Q = tb_old - f/k. Coincides with tb_after_surgery when k = 1.
inline std::optional<TbResult> tbq_after_surgery(const SurgeryDiagram& d, const AuxKnot& aux) {
    const auto cert = nullhomology(d, aux);
    if (!cert) return std::nullopt;  // non-torsion class: no rational Seifert surface
    const Int f = framing_correction(d, aux, cert->witness);
    const Rational framing(f, cert->order);
    return TbResult{Rational(aux.tb_old) - framing, cert->order, framing};
}

struct ObstructionVerdict {
    bool violated = false;
    Rational witness_bound;  // the max-tb bound the verdict was made against
    Rational computed_tb;    // tb, or tb + |rot| when rot enters the inequality
};

/// Bennequin-inequality check against a maximal-tb bound. Without a rotation
/// number this is tb > bound; with one, the bound is read as -chi of a
/// Seifert surface and the test becomes tb + |rot| > -chi.
inline ObstructionVerdict bennequin_check(const Rational& tb, const std::optional<Int>& rot,
                                          const Rational& max_tb_bound) {
    Rational lhs = tb;
    if (rot) lhs = tb + Rational(abs(*rot));
    return ObstructionVerdict{lhs > max_tb_bound, max_tb_bound, lhs};
}

/// Maximal tb realizable in the tight S^3 for the supported knot types:
/// "unknot" -> -1, "negative-torus(2,2n+1)" (n >= 1) -> -2-4n. Unknown
/// types get no bound; this table never invents one.
inline std::optional<Rational> max_tb_bound(const std::string& knot_type) {
    if (knot_type == "unknot") return Rational(-1);
    const std::string prefix = "negative-torus(2,";
    if (knot_type.size() > prefix.size() + 1 && knot_type.compare(0, prefix.size(), prefix) == 0 &&
        knot_type.back() == ')') {
        const std::string arg = knot_type.substr(prefix.size(), knot_type.size() - prefix.size() - 1);
        try {
            const Int m(arg);
            // odd m = 2n+1 with n >= 1
            if (m >= 3 && m % 2 == 1) {
                const Int n = (m - 1) / 2;
                return Rational(-2 - 4 * n);
            }
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

struct ScanRow {
    Int n;
    Int tb_new;
    std::string knot_type;  // type of the companion knot after surgery
    Rational bound;
    bool violated = false;
};

/// Sweep of the contact-surgery-theorem obstruction: for each nonzero n in
/// the range, build the 1/n-surgery diagram along an unknot together with
/// the companion knot (linking 1 for n < 0, linking 2 for n > 0), compute its
/// new tb, and test it against the maximal tb of its post-surgery knot type.
inline std::vector<ScanRow> surgery_theorem_scan(const Int& from, const Int& to) {
    if (from > to) throw std::invalid_argument("surgery_theorem_scan: empty range");
    if (from == 0 && to == 0) throw std::invalid_argument("surgery_theorem_scan: only n = 0 in range");

    std::vector<ScanRow> rows;
    for (Int n = from; n <= to; ++n) {
        if (n == 0) continue;  // 1/0 is the trivial surgery; nothing to scan
        LinkComponent u{"U", Slope(1, n), LegendrianData{Int(-1), std::nullopt}, true};
        const SurgeryDiagram d({u}, IntMatrix(1, 1));
        const AuxKnot aux{Int(-1), std::nullopt, {n < 0 ? Int(1) : Int(2)}};

        const auto tb = tb_after_surgery(d, aux);
        if (!tb || tb->order != 1)
            throw std::logic_error("surgery_theorem_scan: companion knot not nullhomologous");

        // after the Rolfsen twist that undoes the surgery, the companion is
        // an unknot for n < 0 and a negative (2,2n+1)-torus knot for n > 0
        const std::string type =
            n < 0 ? "unknot" : "negative-torus(2," + Int(2 * n + 1).str() + ")";
        const auto bound = max_tb_bound(type);
        if (!bound) throw std::logic_error("surgery_theorem_scan: missing bound for " + type);

        const auto verdict = bennequin_check(tb->value, std::nullopt, *bound);
        Int tb_int = tb->value.num();  // k = 1, so the value is an integer
        rows.push_back(ScanRow{n, tb_int, type, *bound, verdict.violated});
    }
    return rows;
}

}  // namespace surgcalc
