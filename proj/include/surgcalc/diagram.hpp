#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surgcalc/matrix.hpp"
#include "surgcalc/numbers.hpp"
#include "surgcalc/slope.hpp"

namespace surgcalc {

/// Raised by diagram validation and file ingestion. The message aggregates
/// every problem found, not just the first.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LegendrianData {
    Int tb;                   // Thurston-Bennequin number
    std::optional<Int> rot;   // rotation number: stored, never transformed

    friend bool operator==(const LegendrianData&, const LegendrianData&) = default;
};

/// One surgery component. The topological slope (relative to the surface
/// longitude) is the canonical stored form; the contact coefficient is a
/// derived view through tb.
struct LinkComponent {
    std::string id;
    Slope topological;
    std::optional<LegendrianData> legendrian;
    bool unknot = false;  // caller-asserted topological type, never computed

    /// Contact surgery coefficient r_cont = r_top - tb. Requires Legendrian
    /// data and a non-meridional slope.
    std::optional<Rational> contact() const {
        if (!legendrian || topological.is_meridian()) return std::nullopt;
        return topological.coefficient() - Rational(legendrian->tb);
    }

    friend bool operator==(const LinkComponent&, const LinkComponent&) = default;
};

/// An auxiliary knot L0 in the link exterior, carried purely algebraically:
/// its linking numbers with the surgery components and its tb in the
/// standard contact S^3.
struct AuxKnot {
    Int tb_old;
    std::optional<Int> rot_old;
    IntVector linking;  // (l_01, ..., l_0n)

    friend bool operator==(const AuxKnot&, const AuxKnot&) = default;
};

/// A surgery diagram: components with slopes plus the symmetric linking
/// matrix. Validated on construction; instances are immutable values.
class SurgeryDiagram {
public:
    SurgeryDiagram() : linking_(0, 0) {}

    SurgeryDiagram(std::vector<LinkComponent> components, IntMatrix linking)
        : components_(std::move(components)), linking_(std::move(linking)) {
        std::vector<std::string> problems;
        const std::size_t n = components_.size();
        if (linking_.rows() != n || linking_.cols() != n)
            problems.push_back("linking matrix is " + std::to_string(linking_.rows()) + "x" +
                               std::to_string(linking_.cols()) + " for " + std::to_string(n) +
                               " components");
        else {
            for (std::size_t i = 0; i < n; ++i) {
                if (linking_.at(i, i) != 0)
                    problems.push_back("linking diagonal must be 0 (framings live in slopes), got " +
                                       linking_.at(i, i).str() + " at component " + std::to_string(i + 1));
                for (std::size_t j = i + 1; j < n; ++j)
                    if (linking_.at(i, j) != linking_.at(j, i)) {
                        problems.push_back("asymmetric linking: l_" + std::to_string(i + 1) +
                                           std::to_string(j + 1) + " != l_" + std::to_string(j + 1) +
                                           std::to_string(i + 1));
                    }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            const LinkComponent& c = components_[i];
            // Bennequin bound for decorated unknots; checked only when the
            // caller asserts the topological type.
            if (c.unknot && c.legendrian && c.legendrian->tb > -1)
                problems.push_back("component " + c.id + ": Legendrian unknot needs tb <= -1, got " +
                                   c.legendrian->tb.str());
        }
        if (!problems.empty()) {
            std::string msg = "invalid diagram: ";
            for (std::size_t i = 0; i < problems.size(); ++i) {
                if (i) msg += "; ";
                msg += problems[i];
            }
            throw validation_error(msg);
        }
    }

    std::size_t size() const { return components_.size(); }
    const std::vector<LinkComponent>& components() const { return components_; }
    const LinkComponent& component(std::size_t i) const { return components_.at(i); }
    const IntMatrix& linking() const { return linking_; }
    const Int& linking(std::size_t i, std::size_t j) const { return linking_.at(i, j); }

    friend bool operator==(const SurgeryDiagram&, const SurgeryDiagram&) = default;

private:
    std::vector<LinkComponent> components_;
    IntMatrix linking_;
};

/// Re-checks all diagram invariants and returns the canonical value.
/// SurgeryDiagram already validates on construction, so this is the explicit
/// entry point for data that went through aggregate tricks or moves.
inline SurgeryDiagram validate_diagram(const SurgeryDiagram& d) {
    return SurgeryDiagram(d.components(), d.linking());
}

/// Builds a component from ingestion-level data. Either the topological
/// slope or (contact coefficient + tb) must be given; when both are present
/// they must agree exactly through r_top = r_cont + tb.
inline LinkComponent make_component(std::string id, std::optional<Slope> topological,
                                    std::optional<Rational> contact, std::optional<Int> tb,
                                    std::optional<Int> rot, bool unknot) {
    std::optional<Slope> resolved = topological;
    if (contact) {
        if (!tb)
            throw validation_error("component " + id + ": contact coefficient requires tb");
        const Rational top = *contact + Rational(*tb);
        const Slope from_contact = Slope::from_coefficient(top);
        if (resolved) {
            if (!(*resolved == from_contact))
                throw validation_error("component " + id + ": contact/topological coefficient mismatch (" +
                                       contact->to_string() + " + " + tb->str() + " != " +
                                       resolved->to_string() + ")");
        } else {
            resolved = from_contact;
        }
    }
    if (!resolved)
        throw validation_error("component " + id + ": needs \"topological\" or (\"contact\" + \"tb\")");
    if (rot && !tb) throw validation_error("component " + id + ": rot requires tb");

    LinkComponent c{std::move(id), *resolved, std::nullopt, unknot};
    if (tb) c.legendrian = LegendrianData{*tb, rot};
    return c;
}

inline void require_aux_matches(const SurgeryDiagram& d, const AuxKnot& aux) {
    if (aux.linking.size() != d.size())
        throw validation_error("aux linking vector has length " + std::to_string(aux.linking.size()) +
                               " for a diagram with " + std::to_string(d.size()) + " components");
}

}  // namespace surgcalc
