#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "surgcalc/numbers.hpp"

namespace surgcalc {

using IntVector = std::vector<Int>;

/// Dense matrix over arbitrary-precision integers. Row-major storage.
/// Zero-dimensional matrices (0xn, mx0, 0x0) are valid values.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            for (long long e : row) data_.emplace_back(e);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a.at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend IntVector operator*(const IntMatrix& a, const IntVector& x) {
        if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
        IntVector y(a.rows_, Int(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a.at(i, j) * x[j];
        return y;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        const std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix w = *this;
        Int sign = 1;
        Int prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (w.at(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && w.at(p, k) == 0) ++p;
                if (p == n) return 0;
                for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    // exact division is a Bareiss invariant
                    w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
                }
            prev = w.at(k, k);
        }
        return sign * w.at(n - 1, n - 1);
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : ", [";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += at(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> data_;
};

inline IntVector operator*(const Int& c, const IntVector& x) {
    IntVector y(x);
    for (Int& e : y) e *= c;
    return y;
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum dimension mismatch");
    IntVector c(a);
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

inline Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const IntVector& a) {
    for (const Int& e : a)
        if (e != 0) return false;
    return true;
}

}  // namespace surgcalc
