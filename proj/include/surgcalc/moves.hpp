#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surgcalc/diagram.hpp"
#include "surgcalc/matrix.hpp"
#include "surgcalc/numbers.hpp"
#include "surgcalc/slope.hpp"

namespace surgcalc {

/// An n-fold Rolfsen twist along an unknot component (0-based index).
struct TwistSpec {
    std::size_t component;
    Int twists;  // nonzero
};

struct MoveResult {
    SurgeryDiagram diagram;
    std::optional<AuxKnot> aux;
    std::vector<std::string> warnings;
};

namespace detail {

inline void check_component_index(const SurgeryDiagram& d, std::size_t i, const char* op) {
    if (i >= d.size())
        throw validation_error(std::string(op) + ": component index " + std::to_string(i + 1) +
                               " out of range for " + std::to_string(d.size()) + " components");
}

}  // namespace detail

/// Rolfsen twist along the unknot component i, at the coefficient/linking
/// level. Writes:
///   slope_i      (p, q)  ->  (p, q + n p)
///   coefficient_j  r_j   ->  r_j + n l_ij^2          (j != i)
///   linking      l_jk    ->  l_jk + n l_ij l_ik      (j, k != i)
///   tb_j                 ->  tb_j + n l_ij^2         (j != i, Legendrian)
///   aux linking  l_0j    ->  l_0j + n l_ij l_0i      (j != i)
///   aux tb               ->  tb_old + n l_0i^2
/// Rotation numbers are invalidated rather than guessed, and knot-type flags
/// on the other components are dropped: a twist can change their types.
inline MoveResult rolfsen_twist(const SurgeryDiagram& d, const std::optional<AuxKnot>& aux,
                                const TwistSpec& t) {
    detail::check_component_index(d, t.component, "rolfsen_twist");
    const std::size_t i = t.component;
    const Int& n = t.twists;
    if (n == 0) throw validation_error("rolfsen_twist: twist count must be nonzero");
    if (!d.component(i).unknot)
        throw validation_error("rolfsen_twist: component " + d.component(i).id +
                               " is not flagged as an unknot");
    if (aux) require_aux_matches(d, *aux);

    std::vector<std::string> warnings;
    const std::size_t size = d.size();
    auto lk = [&](std::size_t a, std::size_t b) { return d.linking(a, b); };

    std::vector<LinkComponent> comps;
    comps.reserve(size);
    bool dropped_rot = false;
    bool dropped_flag = false;
    for (std::size_t j = 0; j < size; ++j) {
        LinkComponent c = d.component(j);
        if (j == i) {
            c.topological = Slope(c.topological.p(), c.topological.q() + n * c.topological.p());
        } else {
            const Int l = lk(i, j);
            // coefficient shift r -> r + n l^2, done on the slope pair so the
            // meridian (trivial surgery) passes through unchanged
            c.topological = Slope(c.topological.p() + n * l * l * c.topological.q(),
                                  c.topological.q());
            if (c.legendrian) c.legendrian->tb += n * l * l;
            if (c.unknot) {
                c.unknot = false;
                dropped_flag = true;
            }
        }
        if (c.legendrian && c.legendrian->rot) {
            c.legendrian->rot.reset();
            dropped_rot = true;
        }
        comps.push_back(std::move(c));
    }

    IntMatrix linking(size, size);
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k) {
            if (j == k) continue;
            if (j == i || k == i) linking.at(j, k) = lk(j, k);
            else linking.at(j, k) = lk(j, k) + n * lk(i, j) * lk(i, k);
        }

    std::optional<AuxKnot> new_aux;
    if (aux) {
        AuxKnot a = *aux;
        const Int l0i = aux->linking[i];
        for (std::size_t j = 0; j < size; ++j)
            if (j != i) a.linking[j] = aux->linking[j] + n * lk(i, j) * l0i;
        a.tb_old += n * l0i * l0i;
        if (a.rot_old) {
            a.rot_old.reset();
            dropped_rot = true;
        }
        new_aux = std::move(a);
    }

    if (dropped_rot) warnings.push_back("rotation numbers invalidated by the twist");
    if (dropped_flag) warnings.push_back("unknot flags on other components dropped: a twist can change knot types");
    return MoveResult{SurgeryDiagram(std::move(comps), std::move(linking)), std::move(new_aux),
                      std::move(warnings)};
}

/// Remove a component with the meridional slope (trivial Dehn surgery).
/// The linking matrix and aux vector shrink; nothing else changes.
inline MoveResult delete_trivial(const SurgeryDiagram& d, const std::optional<AuxKnot>& aux,
                                 std::size_t i) {
    detail::check_component_index(d, i, "delete_trivial");
    if (!d.component(i).topological.is_meridian())
        throw validation_error("delete_trivial: component " + d.component(i).id +
                               " has slope " + d.component(i).topological.to_string() +
                               ", not the meridian");
    if (aux) require_aux_matches(d, *aux);

    const std::size_t size = d.size();
    std::vector<LinkComponent> comps;
    comps.reserve(size - 1);
    for (std::size_t j = 0; j < size; ++j)
        if (j != i) comps.push_back(d.component(j));

    IntMatrix linking(size - 1, size - 1);
    for (std::size_t j = 0, jj = 0; j < size; ++j) {
        if (j == i) continue;
        for (std::size_t k = 0, kk = 0; k < size; ++k) {
            if (k == i) continue;
            linking.at(jj, kk) = d.linking(j, k);
            ++kk;
        }
        ++jj;
    }

    std::optional<AuxKnot> new_aux;
    if (aux) {
        AuxKnot a = *aux;
        a.linking.erase(a.linking.begin() + static_cast<std::ptrdiff_t>(i));
        new_aux = std::move(a);
    }
    return MoveResult{SurgeryDiagram(std::move(comps), std::move(linking)), std::move(new_aux), {}};
}

/// Contact Rolfsen twist: delete a tb = -1 Legendrian unknot with contact
/// coefficient 1 + 1/n (topological coefficient 1/n), compensating the rest
/// of the diagram. Composite of rolfsen_twist(i, -n) and delete_trivial(i).
inline MoveResult contact_rolfsen(const SurgeryDiagram& d, const std::optional<AuxKnot>& aux,
                                  std::size_t i) {
    detail::check_component_index(d, i, "contact_rolfsen");
    const LinkComponent& c = d.component(i);
    if (!c.unknot)
        throw validation_error("contact_rolfsen: component " + c.id + " is not flagged as an unknot");
    if (!c.legendrian || c.legendrian->tb != -1)
        throw validation_error("contact_rolfsen: component " + c.id + " must be Legendrian with tb = -1");
    const Slope& s = c.topological;
    if (s.is_meridian() || abs(s.p()) != 1)
        throw validation_error("contact_rolfsen: component " + c.id + " needs contact coefficient 1 + 1/n, got " +
                               (c.contact() ? c.contact()->to_string() : std::string("infinity")));
    const Int n = s.p() * s.q();  // topological coefficient 1/n

    MoveResult twisted = rolfsen_twist(d, aux, TwistSpec{i, -n});
    MoveResult out = delete_trivial(twisted.diagram, twisted.aux, i);
    out.warnings.insert(out.warnings.begin(), twisted.warnings.begin(), twisted.warnings.end());
    return out;
}

}  // namespace surgcalc
