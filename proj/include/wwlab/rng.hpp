#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace wwlab {

// Deterministic helpers on top of mt19937_64.  std::uniform_real_distribution
// is implementation-defined, so uniforms are derived from raw bits directly.
inline double uniform01(std::mt19937_64& gen) {
    return double(gen() >> 11) * 0x1p-53;
}

inline std::complex<double> unit_complex(std::mt19937_64& gen) {
    double t = 2.0 * 3.141592653589793238 * uniform01(gen);
    return {std::cos(t), std::sin(t)};
}

// Uniform on the closed unit disk.
inline std::complex<double> disk_complex(std::mt19937_64& gen) {
    double r = std::sqrt(uniform01(gen));
    return r * unit_complex(gen);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 step, decorrelates per-stream seeds
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace wwlab
