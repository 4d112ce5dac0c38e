#pragma once

// Shared deterministic generators and independent oracles for the test
// suites. Everything here must stay independent of the implementation paths
// it is used to check: brute-force search and Cramer's rule only.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "surgcalc/diagram.hpp"
#include "surgcalc/matrix.hpp"
#include "surgcalc/numbers.hpp"
#include "surgcalc/slope.hpp"

namespace testsupport {

using surgcalc::Int;
using surgcalc::IntMatrix;
using surgcalc::IntVector;
using surgcalc::Rational;

using Rng = std::mt19937_64;

inline long long random_in(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long lo,
                               long long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_in(rng, lo, hi);
    return m;
}

inline IntVector random_vector(Rng& rng, std::size_t n, long long lo, long long hi) {
    IntVector v(n);
    for (Int& e : v) e = random_in(rng, lo, hi);
    return v;
}

/// Exhaustive search for an integer solution of A x = b with x in [-B, B]^n.
inline std::optional<IntVector> brute_force_solve(const IntMatrix& a, const IntVector& b, long long box) {
    const std::size_t n = a.cols();
    IntVector x(n, Int(-box));
    if (n == 0) return surgcalc::is_zero(b) ? std::optional<IntVector>(x) : std::nullopt;
    while (true) {
        if (a * x == b) return x;
        std::size_t i = 0;
        while (i < n) {
            if (x[i] < box) {
                ++x[i];
                break;
            }
            x[i] = -box;
            ++i;
        }
        if (i == n) return std::nullopt;
    }
}

/// Unique rational solution of a square nonsingular system by Cramer's rule.
/// Decisive independent oracle: integral -> solvable over Z with exactly that
/// solution; non-integral coordinate -> no integer solution exists.
inline std::optional<std::vector<Rational>> cramer_solve(const IntMatrix& a, const IntVector& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n) return std::nullopt;
    const Int det = a.determinant();
    if (det == 0) return std::nullopt;
    std::vector<Rational> x;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix aj = a;
        for (std::size_t i = 0; i < n; ++i) aj.at(i, j) = b[i];
        x.emplace_back(aj.determinant(), det);
    }
    return x;
}

/// Random coprime slope with small entries, never meridional unless asked.
inline surgcalc::Slope random_slope(Rng& rng, bool allow_meridian = false) {
    while (true) {
        const long long p = random_in(rng, -5, 5);
        const long long q = random_in(rng, allow_meridian ? 0 : 1, 4);
        if (p == 0 && q == 0) continue;
        if (q == 0 && !allow_meridian) continue;
        return surgcalc::Slope(p, q);
    }
}

struct RandomDiagram {
    surgcalc::SurgeryDiagram diagram;
    surgcalc::AuxKnot aux;
    std::size_t unknot_index;  // flagged component, usable as a twist target
};

/// Decorated diagram for move-invariance suites: every component Legendrian
/// (rot-free), exactly one flagged unknot, symmetric small linking matrix.
inline RandomDiagram random_decorated_diagram(Rng& rng, std::size_t max_components = 4) {
    const std::size_t n = static_cast<std::size_t>(random_in(rng, 1, static_cast<long long>(max_components)));
    const std::size_t unknot_index = static_cast<std::size_t>(random_in(rng, 0, static_cast<long long>(n) - 1));

    std::vector<surgcalc::LinkComponent> comps;
    for (std::size_t i = 0; i < n; ++i) {
        const bool flagged = i == unknot_index;
        const Int tb = flagged ? Int(random_in(rng, -4, -1)) : Int(random_in(rng, -4, 3));
        comps.push_back(surgcalc::LinkComponent{"L" + std::to_string(i + 1), random_slope(rng),
                                                surgcalc::LegendrianData{tb, std::nullopt}, flagged});
    }

    IntMatrix linking(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Int l = random_in(rng, -3, 3);
            linking.at(i, j) = l;
            linking.at(j, i) = l;
        }

    surgcalc::AuxKnot aux{Int(random_in(rng, -4, 2)), std::nullopt, random_vector(rng, n, -3, 3)};
    return RandomDiagram{surgcalc::SurgeryDiagram(std::move(comps), std::move(linking)), std::move(aux),
                         unknot_index};
}

}  // namespace testsupport
