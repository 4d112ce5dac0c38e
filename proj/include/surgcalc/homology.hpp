#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "surgcalc/diagram.hpp"
#include "surgcalc/diophantine.hpp"
#include "surgcalc/matrix.hpp"
#include "surgcalc/numbers.hpp"
#include "surgcalc/snf.hpp"

namespace surgcalc {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z_{d_1} + ... + Z_{d_k} with 2 <= d_1 | d_2 | ... | d_k.
struct AbelianGroup {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }

    /// Product of the invariant factors (1 for torsion-free groups).
    Int torsion_order() const {
        Int p = 1;
        for (const Int& d : torsion) p *= d;
        return p;
    }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        auto append = [&s](const std::string& piece) {
            if (!s.empty()) s += " + ";
            s += piece;
        };
        if (free_rank == 1) append("Z");
        else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
        for (const Int& d : torsion) append("Z_" + d.str());
        return s;
    }
};

/// Cokernel of an integer matrix acting on Z^rows (relations = columns),
/// in canonical invariant-factor form.
inline AbelianGroup cokernel_group(const IntMatrix& relations) {
    const SNFDecomposition s = smith_normal_form(relations);
    AbelianGroup g;
    const std::size_t k = std::min(relations.rows(), relations.cols());
    for (std::size_t i = 0; i < k; ++i)
        if (s.diagonal(i) >= 2) g.torsion.push_back(s.diagonal(i));
    g.free_rank = relations.rows() - s.rank;
    return g;
}

/// Generalized linking matrix of the diagram: Q_ii = p_i, Q_ij = q_j * l_ij.
/// For integer framings (all q_i = 1) this is the classical linking matrix.
inline IntMatrix build_Q(const SurgeryDiagram& d) {
    const std::size_t n = d.size();
    IntMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        q.at(i, i) = d.component(i).topological.p();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            q.at(i, j) = d.component(j).topological.q() * d.linking(i, j);
        }
    }
    return q;
}

/// H_1 of the surgered manifold: the meridians mu_i generate, the rows of Q
/// relate them (p_i mu_i + q_i sum_j l_ij mu_j = 0).
inline AbelianGroup first_homology(const SurgeryDiagram& d) {
    return cokernel_group(build_Q(d));
}

/// Order-k certificate for the class of an auxiliary knot: Q a = k l with k
/// minimal. k = 1 means the knot is nullhomologous in the surgered manifold.
struct NullhomologyCertificate {
    Int order;                      // k >= 1
    IntVector witness;              // a with Q a = k l
    std::vector<IntVector> kernel;  // integer kernel of Q

    bool nullhomologous() const { return order == 1; }
};

/// Decide (rational) nullhomology of the auxiliary knot. Returns the minimal
/// k with a witness, or nullopt when the class is non-torsion ("infinite
/// order" is a result, not an error).
inline std::optional<NullhomologyCertificate> nullhomology(const SurgeryDiagram& d, const AuxKnot& aux) {
    require_aux_matches(d, aux);
    const IntMatrix q = build_Q(d);

    const std::optional<Int> k = cokernel_order(q, aux.linking);
    if (!k) return std::nullopt;

    IntVector scaled(aux.linking);
    for (Int& e : scaled) e *= *k;
    const std::optional<DiophantineSolution> sol = solve_diophantine(q, scaled);
    if (!sol) throw std::logic_error("nullhomology: order-k system unexpectedly unsolvable");

    return NullhomologyCertificate{*k, sol->particular, sol->kernel};
}

/// Relation matrix of the auxiliary-knot exterior on the generators
/// mu_0, ..., mu_n (one column per surgery relation): relation i picks up
/// the extra term q_i * l_i0 * mu_0 from the auxiliary meridian, and its
/// lower block is Q.
inline IntMatrix build_exterior_relations(const SurgeryDiagram& d, const AuxKnot& aux) {
    require_aux_matches(d, aux);
    const std::size_t n = d.size();
    IntMatrix relations(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) {
        relations.at(0, i) = d.component(i).topological.q() * aux.linking[i];
        relations.at(i + 1, i) = d.component(i).topological.p();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            relations.at(j + 1, i) = d.component(i).topological.q() * d.linking(i, j);
        }
    }
    return relations;
}

/// H_1 of the complement of the auxiliary knot in the surgered manifold.
inline AbelianGroup exterior_homology(const SurgeryDiagram& d, const AuxKnot& aux) {
    return cokernel_group(build_exterior_relations(d, aux));
}

}  // namespace surgcalc
