#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

#include "wwlab/bigint.hpp"
#include "wwlab/errors.hpp"

namespace wwlab {

using cplx = std::complex<double>;

// Fraction in [0,1) stored as raw/2^128.  Addition wraps mod 2^128, which is
// exactly arithmetic mod 1: rotation orbits generated with this type carry no
// per-step representation error.
class Fix128 {
  public:
    using u128 = unsigned __int128;

    constexpr Fix128() : raw_(0) {}
    static constexpr Fix128 from_raw(u128 raw) { return Fix128(raw); }
    static constexpr Fix128 from_words(std::uint64_t hi, std::uint64_t lo) {
        return Fix128((u128(hi) << 64) | u128(lo));
    }

    // floor(num/den * 2^128) for 0 <= num/den < 1.
    static Fix128 from_ratio(const BigInt& num, const BigInt& den);
    static Fix128 from_ratio(std::uint64_t num, std::uint64_t den) {
        return from_ratio(BigInt(num), BigInt(den));
    }

    // Nearest-below fixed-point values of frequently used irrationals.
    static Fix128 sqrt2_minus_1();
    static Fix128 golden_ratio_frac();  // frac((sqrt(5)-1)/2)

    static Fix128 from_double(double x);

    constexpr u128 raw() const { return raw_; }
    std::uint64_t hi() const { return std::uint64_t(raw_ >> 64); }
    std::uint64_t lo() const { return std::uint64_t(raw_); }

    double to_double() const {
        return double(hi()) * 0x1p-64 + double(lo()) * 0x1p-128;
    }

    friend constexpr Fix128 operator+(Fix128 a, Fix128 b) { return Fix128(a.raw_ + b.raw_); }
    friend constexpr Fix128 operator-(Fix128 a, Fix128 b) { return Fix128(a.raw_ - b.raw_); }
    constexpr Fix128 operator-() const { return Fix128(u128(0) - raw_); }
    Fix128& operator+=(Fix128 o) { raw_ += o.raw_; return *this; }

    // frac(k*x), exact: low 128 bits of the integer product.
    friend constexpr Fix128 operator*(u128 k, Fix128 x) { return Fix128(k * x.raw_); }

    friend constexpr bool operator==(Fix128 a, Fix128 b) { return a.raw_ == b.raw_; }
    friend constexpr bool operator<(Fix128 a, Fix128 b) { return a.raw_ < b.raw_; }
    friend constexpr bool operator<=(Fix128 a, Fix128 b) { return a.raw_ <= b.raw_; }

    BigInt to_bigint() const { return (BigInt(hi()) << 64) | BigInt(lo()); }
    Rational to_rational() const { return Rational(to_bigint(), BigInt(1) << 128); }
    std::string to_hex() const;

  private:
    explicit constexpr Fix128(u128 raw) : raw_(raw) {}
    u128 raw_;
};

// e(x) := exp(2*pi*i*x) evaluated at a fixed-point phase.
inline cplx unit_phase(Fix128 x) {
    double t = 2.0 * std::numbers::pi * x.to_double();
    return {std::cos(t), std::sin(t)};
}

}  // namespace wwlab
