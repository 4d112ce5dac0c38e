#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include "surgcalc/matrix.hpp"
#include "surgcalc/numbers.hpp"

namespace surgcalc {

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... , all d_i >= 0, zeros trailing.
///
/// The factorization is re-multiplied and checked when it is built, so a
/// constructed value always satisfies the invariants.
struct SNFDecomposition {
    IntMatrix u;  // rows(A) x rows(A)
    IntMatrix d;  // rows(A) x cols(A), diagonal
    IntMatrix v;  // cols(A) x cols(A)
    std::size_t rank = 0;

    const Int& diagonal(std::size_t i) const { return d.at(i, i); }
};

namespace detail {

inline void verify_snf(const IntMatrix& a, const SNFDecomposition& s) {
    if (!(s.u * a * s.v == s.d)) throw std::logic_error("SNF verification failed: U*A*V != D");
    const std::size_t k = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < k; ++i) {
        if (s.d.at(i, i) < 0) throw std::logic_error("SNF verification failed: negative diagonal");
        if (i + 1 < k && s.d.at(i, i) != 0 && s.d.at(i + 1, i + 1) % s.d.at(i, i) != 0)
            throw std::logic_error("SNF verification failed: divisibility chain broken");
        if (s.d.at(i, i) == 0 && i + 1 < k && s.d.at(i + 1, i + 1) != 0)
            throw std::logic_error("SNF verification failed: zero before nonzero diagonal");
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j && s.d.at(i, j) != 0)
                throw std::logic_error("SNF verification failed: D not diagonal");
    if (abs(s.u.determinant()) != 1 || abs(s.v.determinant()) != 1)
        throw std::logic_error("SNF verification failed: factor not unimodular");
}

}  // namespace detail

/// Diagonalize over Z. Pivoting picks the minimal-absolute-value nonzero
/// entry of the remaining submatrix, which keeps coefficient growth tame
/// for the small matrices surgery diagrams produce.
inline SNFDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    SNFDecomposition s;
    s.d = a;
    s.u = IntMatrix::identity(m);
    s.v = IntMatrix::identity(n);

    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    // row_dst += c * row_src (left multiplication, tracked in U)
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < n; ++j) d.at(dst, j) += c * d.at(src, j);
        for (std::size_t j = 0; j < m; ++j) u.at(dst, j) += c * u.at(src, j);
    };
    // col_dst += c * col_src (right multiplication, tracked in V)
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < m; ++i) d.at(i, dst) += c * d.at(i, src);
        for (std::size_t i = 0; i < n; ++i) v.at(i, dst) += c * v.at(i, src);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        // minimal |entry| of the remaining submatrix into the pivot slot
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (d.at(i, j) == 0) continue;
                if (!found || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;  // submatrix is zero; trailing diagonal stays 0
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (bool stable = false; !stable;) {
            stable = true;
            // clear column t
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                const Int q = d.at(i, t) / d.at(t, t);  // truncated: |remainder| < |pivot|
                add_row(i, t, -q);
                if (d.at(i, t) != 0) {
                    swap_rows(i, t);  // strictly smaller pivot
                    stable = false;
                }
            }
            // clear row t
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                const Int q = d.at(t, j) / d.at(t, t);
                add_col(j, t, -q);
                if (d.at(t, j) != 0) {
                    swap_cols(j, t);
                    stable = false;
                }
            }
            if (!stable) continue;
            // pivot must divide every remaining entry or the chain can break
            for (std::size_t i = t + 1; i < m && stable; ++i)
                for (std::size_t j = t + 1; j < n && stable; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(t, i, Int(1));
                        stable = false;
                    }
        }

        if (d.at(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) d.at(t, j) = -d.at(t, j);
            for (std::size_t j = 0; j < m; ++j) u.at(t, j) = -u.at(t, j);
        }
    }

    s.rank = 0;
    for (std::size_t i = 0; i < steps; ++i)
        if (d.at(i, i) != 0) ++s.rank;

    detail::verify_snf(a, s);
    return s;
}

}  // namespace surgcalc
