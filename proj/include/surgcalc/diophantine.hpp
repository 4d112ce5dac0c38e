#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "surgcalc/matrix.hpp"
#include "surgcalc/numbers.hpp"
#include "surgcalc/snf.hpp"

namespace surgcalc {

struct DiophantineSolution {
    IntVector particular;            // A * particular == b
    std::vector<IntVector> kernel;   // basis of { x in Z^n : A x = 0 }
};

namespace detail {

inline std::vector<IntVector> kernel_basis(const SNFDecomposition& s) {
    // columns of V past the rank map onto zero columns of D
    std::vector<IntVector> basis;
    const std::size_t n = s.v.cols();
    for (std::size_t j = s.rank; j < n; ++j) {
        IntVector col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = s.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

}  // namespace detail

/// Solve A x = b over the integers. Returns one particular solution and a
/// kernel basis, or nullopt when no integer solution exists.
inline std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_diophantine: dimension mismatch");
    const SNFDecomposition s = smith_normal_form(a);
    const IntVector y = s.u * b;

    // D z = y: divisibility inside the rank, exact zero beyond it
    IntVector z(a.cols(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (y[i] % s.diagonal(i) != 0) return std::nullopt;
            z[i] = y[i] / s.diagonal(i);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }

    DiophantineSolution sol;
    sol.particular = s.v * z;
    sol.kernel = detail::kernel_basis(s);
    return sol;
}

/// Minimal k >= 1 such that k*b lies in the integer column span of A,
/// or nullopt when no multiple of b does ("infinite order" in coker A).
inline std::optional<Int> cokernel_order(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("cokernel_order: dimension mismatch");
    const SNFDecomposition s = smith_normal_form(a);
    const IntVector y = s.u * b;

    Int k = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            const Int g = gcd(s.diagonal(i), abs(y[i]));
            k = lcm(k, s.diagonal(i) / g);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return k;
}

}  // namespace surgcalc
