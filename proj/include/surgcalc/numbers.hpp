#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace surgcalc {

// Arbitrary-precision integer. Everything in this library is exact;
// Smith-normal-form intermediates in particular can grow far past 64 bits.
using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline std::string to_string(const Int& a) { return a.str(); }

/// Exact rational number. Always stored reduced with denominator >= 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int value) : num_(std::move(value)), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(int value) : num_(value), den_(1) {}

    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        reduce();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // denominators are positive, so cross-multiplication preserves order
        const Int lhs = a.num_ * b.den_;
        const Int rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "num/den", or just "num" for integers. Never a decimal.
    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    struct already_reduced {};
    Rational(Int num, Int den, already_reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const Int g = surgcalc::gcd(abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace surgcalc
