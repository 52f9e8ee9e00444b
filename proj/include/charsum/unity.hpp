#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "charsum/common.hpp"

namespace charsum {

// e^{2*pi*i * num/den} rendered to a complex double. Quarter-turn angles are
// snapped to exact axis values so quadratic/quartic character sums stay clean.
inline Complex root_of_unity(int64_t num, int64_t den) {
    if (den < 1) throw std::domain_error("root_of_unity: denominator must be >= 1");
    num %= den;
    if (num < 0) num += den;
    int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    switch (den) {
        case 1: return {1.0, 0.0};
        case 2: return {-1.0, 0.0};
        case 4: return (num == 1) ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
        default: break;
    }
    double angle = kTwoPi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

// Exact root of unity e^{2*pi*i * num/den} in lowest terms (0 <= num < den),
// or the distinguished zero value (den == 0). Multiplication adds exponents
// mod 1 in integer arithmetic, so products never accumulate rounding error.
// Every denominator in a character group divides the group exponent, which
// keeps the integers far from overflow.
class UnityExponent {
public:
    constexpr UnityExponent() : num_(0), den_(1) {}

    static constexpr UnityExponent one() { return UnityExponent(); }
    static constexpr UnityExponent zero() {
        UnityExponent u;
        u.den_ = 0;
        return u;
    }
    static UnityExponent root(int64_t num, int64_t den) {
        if (den < 1) throw std::domain_error("UnityExponent: denominator must be >= 1");
        num %= den;
        if (num < 0) num += den;
        int64_t g = std::gcd(num, den);
        UnityExponent u;
        u.num_ = num / g;
        u.den_ = den / g;
        return u;
    }

    bool is_zero() const { return den_ == 0; }
    bool is_one() const { return den_ == 1; }
    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    UnityExponent conj() const {
        if (is_zero() || num_ == 0) return *this;
        UnityExponent u;
        u.num_ = den_ - num_;
        u.den_ = den_;
        return u;
    }

    UnityExponent pow(int64_t e) const {
        if (is_zero()) return *this;
        if (e < 0) return conj().pow(-e);
        return root(static_cast<int64_t>(static_cast<__int128>(num_) * e % den_), den_);
    }

    friend UnityExponent operator*(const UnityExponent& a, const UnityExponent& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        int64_t l = std::lcm(a.den_, b.den_);
        int64_t n = a.num_ * (l / a.den_) + b.num_ * (l / b.den_);
        return root(n, l);
    }

    bool operator==(const UnityExponent&) const = default;

    Complex to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        return root_of_unity(num_, den_);
    }

private:
    int64_t num_;
    int64_t den_;
};

}  // namespace charsum
