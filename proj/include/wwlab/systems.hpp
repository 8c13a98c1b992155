#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wwlab/fix128.hpp"
#include "wwlab/orbit.hpp"
#include "wwlab/rng.hpp"

namespace wwlab {

// Deterministic bitstream b_1, b_2, ...  Seeded streams are counter-based
// (stateless random access); periodic streams repeat an explicit pattern.
class BitStream {
  public:
    static BitStream seeded(std::uint64_t seed) {
        BitStream s;
        s.seed_ = seed;
        return s;
    }
    static BitStream periodic(std::vector<std::uint8_t> pattern);

    // b_i of the current state, i >= 1.
    int bit(std::uint64_t i) const;
    BitStream shifted(std::uint64_t k = 1) const {
        BitStream s = *this;
        s.offset_ += k;
        return s;
    }
    std::uint64_t offset() const { return offset_; }
    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_ = 0;
    std::uint64_t offset_ = 0;
    std::vector<std::uint8_t> pattern_;  // empty => seeded
};

// Point of the Bernoulli model of the doubling map: the shift acts on the
// bitstream, one bit per step.
struct BernoulliState {
    BitStream bits;

    BernoulliState shifted() const { return {bits.shifted()}; }
    // First `precision_bits` bits as a binary fraction 0.b_1 b_2 ...
    Fix128 point(int precision_bits) const;
};

struct RotationState {
    Fix128 x;
    Fix128 alpha;

    RotationState stepped() const { return {x + alpha, alpha}; }
};

// C^d-valued observable on [0,1): either a trigonometric polynomial
// f_i(x) = sum_j c_{i,j} e(jx), or a scalar indicator of a fixed-point
// interval [lo, hi).
class Observable {
  public:
    using CoeffTable = std::map<long long, cplx>;

    static Observable trig(std::vector<CoeffTable> per_coordinate);
    static Observable harmonic(long long j, cplx coeff = 1.0);  // d = 1
    static Observable constant(const CVec& xi);
    static Observable indicator(Fix128 lo, Fix128 hi);
    static Observable random_trig(std::size_t dim, long long degree, std::uint64_t seed,
                                  bool mean_zero);

    bool is_indicator() const { return indicator_.has_value(); }
    std::size_t dim() const { return is_indicator() ? 1 : coeffs_.size(); }
    bool mean_zero() const;
    long long degree() const;
    const std::vector<CoeffTable>& coeffs() const { return coeffs_; }

    CVec eval(Fix128 x) const;

    // Exact integral of ||f|| when the representation allows it: indicator
    // length, or constant-modulus trig polynomials (at most one nonzero
    // coefficient per coordinate).
    std::optional<double> norm_integral_exact() const;
    // Exact value when available, midpoint-rule estimate otherwise.
    double norm_integral(std::size_t samples = std::size_t(1) << 16) const;

  private:
    std::vector<CoeffTable> coeffs_;
    std::optional<std::pair<Fix128, Fix128>> indicator_;
};

// values[n] = f(x0 + n*alpha mod 1), n = 1..N, phases exact in Fix128.
OrbitSeq rotation_orbit(Fix128 x0, Fix128 alpha, const Observable& f, std::size_t N);

// values[n] = f(0.b_{n+1} b_{n+2} ... truncated to precision_bits), n = 1..N.
OrbitSeq doubling_orbit(const BernoulliState& state, const Observable& f, std::size_t N,
                        int precision_bits = 128);

// Exact coefficient pairing for trig polynomials.
cplx trig_pairing_exact(const Observable& f, const Observable& g);

// int_0^1 <f(x), g(x)> dx: exact from coefficients when both operands are
// trig polynomials, Monte-Carlo otherwise.
cplx mc_pairing(const Observable& f, const Observable& g, std::size_t samples,
                std::uint64_t seed);

// Always-sampled estimator (used to cross-check the exact path).
cplx mc_pairing_estimate(const Observable& f, const Observable& g, std::size_t samples,
                         std::uint64_t seed);

}  // namespace wwlab
