#include "wwlab/fix128.hpp"

#include <cmath>
#include <sstream>

namespace wwlab {

Fix128 Fix128::from_ratio(const BigInt& num, const BigInt& den) {
    if (den <= 0 || num < 0 || num >= den)
        throw contract_error("Fix128::from_ratio requires 0 <= num/den < 1");
    BigInt scaled = (num << 128) / den;
    std::uint64_t hi = std::uint64_t(scaled >> 64);
    std::uint64_t lo = std::uint64_t(scaled & ((BigInt(1) << 64) - 1));
    return from_words(hi, lo);
}

Fix128 Fix128::sqrt2_minus_1() {
    // floor(sqrt(2)*2^128) - 2^128 = isqrt(2^257) - 2^128
    BigInt s = boost::multiprecision::sqrt(BigInt(1) << 257);
    BigInt frac = s - (BigInt(1) << 128);
    return from_words(std::uint64_t(frac >> 64), std::uint64_t(frac & ((BigInt(1) << 64) - 1)));
}

Fix128 Fix128::golden_ratio_frac() {
    // (sqrt(5)-1)/2 = isqrt(5*2^256)/2^129 - 1/2, scaled to 128 bits
    BigInt s = boost::multiprecision::sqrt(BigInt(5) << 256);  // floor(sqrt(5)*2^128)
    BigInt frac = (s - (BigInt(1) << 128)) >> 1;
    return from_words(std::uint64_t(frac >> 64), std::uint64_t(frac & ((BigInt(1) << 64) - 1)));
}

Fix128 Fix128::from_double(double x) {
    if (!(x >= 0.0) || x >= 1.0) throw contract_error("Fix128::from_double requires x in [0,1)");
    double scaled = std::ldexp(x, 64);
    double hi = std::floor(scaled);
    double lo = std::floor(std::ldexp(scaled - hi, 64));
    return from_words(std::uint64_t(hi), std::uint64_t(lo));
}

std::string Fix128::to_hex() const {
    std::ostringstream os;
    os << "0x" << std::hex << hi() << ":" << lo();
    return os.str();
}

}  // namespace wwlab
