#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wwlab/operators.hpp"

namespace wwlab {

// Finite-horizon mixing statistics of the pairings p_h = <T^h f, g>.
struct MixingProfile {
    std::vector<cplx> pairings;          // p_1 .. p_{H_max}
    std::vector<std::size_t> horizons;   // dyadic grid 16, 32, ..., H_max
    std::vector<cplx> ergodic_avg;       // (1/H) sum_{h<=H} p_h
    std::vector<double> abs_avg;         // (1/H) sum_{h<=H} |p_h|
    std::vector<double> tail_sup;        // max_{H/2 < h <= H} |p_h|
    bool exact = true;                   // false when sampled
    double standard_error = 0.0;         // reported for sampled pairings
};

// p_h for h = 1..H.  Exact coefficient-space evolution for Koopman
// (rotation/doubling), harmonic MultOp/MultKoopman over rotations and
// TwistedU; midpoint-sampled otherwise (sample count adjustable).
std::vector<cplx> pairing_sequence(const OperatorSpec& op, const Observable& f,
                                   const Observable& g, std::size_t H,
                                   std::size_t mc_samples = std::size_t(1) << 16,
                                   bool* exact_out = nullptr);

MixingProfile mixing_profile(const OperatorSpec& op, const Observable& f, const Observable& g,
                             std::size_t H_max,
                             std::size_t mc_samples = std::size_t(1) << 16);

std::string profile_to_csv(const MixingProfile& profile);

// Finite-sum set FS((n_k)_{k<=depth}): all sums over nonempty subsets.
struct FSSet {
    std::vector<std::size_t> generators;
    std::size_t depth = 0;
    std::vector<std::size_t> elements;  // sorted, distinct

    static FSSet build(std::vector<std::size_t> generators, std::size_t depth);
};

struct ProbeResult {
    double max_abs = 0.0;
    std::size_t argmax_h = 0;
};

// max over h in the FS set of |<T^h f, g>|.
ProbeResult mild_mixing_probe(const OperatorSpec& op, const Observable& f, const Observable& g,
                              const FSSet& fs, std::size_t mc_samples = std::size_t(1) << 16);

struct PacbReport {
    std::vector<double> ratios;  // per family member: max over samples
    double max_ratio = 0.0;
    std::size_t argmax_member = 0;
};

// Empirical pointwise-absolute-Cesaro constant: per family member the max
// over sample points of [(1/N) sum_n ||T^n f(x)||] / integral ||f||.
PacbReport pacb_ratio(const OperatorSpec& op, const std::vector<Observable>& f_family,
                      const std::vector<PointState>& x_samples, std::size_t N);

// One checkpoint of the exact non-mean-ergodicity table.
struct DyadicAverageRow {
    std::size_t m = 0;
    std::size_t N = 0;
    std::uint64_t count = 0;   // selected iterates among n = 0..N-1
    Rational average;          // count / (2N), exact
    Rational target;           // 1/3 at N = 2^(2m+1), 1/6 at N = 2^(2m+2)
    Rational gap;              // |target - average|
};

// Cesaro averages (1/N) sum_{n=0}^{N-1} <R^n f, g> for f the unit-mass step
// on [1/2, 1) and the block-set selector g; the pairing is exactly 1/2 when
// n lies in the block set and 0 otherwise, identically for both variants.
// Evaluated at N = 2^(2m+1) and N = 2^(2m+2), m = 1..m_max, exact rationals.
std::vector<DyadicAverageRow> dyadic_mean_ergodicity(DyadicVariant v, std::size_t m_max);

// |B intersect [1, x]| for B the union of blocks [4^m, 2*4^m).
std::uint64_t block_set_count(std::uint64_t x);

}  // namespace wwlab
