#pragma once

#include <cstdint>
#include <vector>

#include "wwlab/orbit.hpp"

namespace wwlab {

// Finite weight sequence (c_n), |c_n| <= 1.
struct WeightSeq {
    std::vector<cplx> c;

    std::size_t size() const { return c.size(); }
    // (1/N) sum_{n<N} |c_n - c_{n+1}|
    double variation() const;
    double max_modulus() const;
};

constexpr double kModulusTol = 1e-12;

// Verdict of a membership test, with enough data to audit near-misses.
struct Membership {
    bool ok = false;
    double variation = 0.0;  // best (de)modulated variation found
    cplx lambda = 1.0;       // demodulation witness (class C), 1 for class I
    double slack = 0.0;      // grid discretization slack on the variation
    // Negative verdicts are certified when even variation - slack >= delta.
    bool certified = true;
};

// (1/N) sum |c_n - c_{n+1}| < delta and all |c_n| <= 1.
Membership check_I(const WeightSeq& c, double delta);

// Exists lambda on the grid with (1/N) sum |lambda c_n - c_{n+1}| < delta.
// lambda_grid = 0 selects the default 4N; fewer than 4N points is a
// contract error.
Membership check_C(const WeightSeq& c, double delta, std::size_t lambda_grid = 0);

// Parameters of the rigidity-type class: for every w <= N some shift
// k_{w,i} (i <= b_w) must nearly lambda-periodize the weight at scale
// delta_w.  b_w = k_table[w-1].size() must be nondecreasing.
struct RParams {
    cplx lambda = 1.0;
    std::vector<double> delta;                  // delta_w, 1-based w
    std::vector<std::vector<std::size_t>> k_table;  // k_{w,i}
};

struct RMembership {
    bool ok = false;
    std::vector<std::size_t> chosen_k;  // per w, valid when ok
    std::size_t failed_w = 0;           // first w with no admissible shift
};

RMembership check_R(const WeightSeq& c, const RParams& p);

enum class WeightClass { I, C };

// Certified bound: ||(1/N) sum v_n c_n|| <= UB for every weight in the
// class.  Summation by parts gives UB = (max_n ||V_n|| / N)(N delta + 1);
// for class C the partial-sum sup is taken over all modulations lambda,
// certified on a dyadic subgrid of n with a triangle-inequality bridge.
double abel_upper_bound(const OrbitSeq& v, std::size_t N, double delta, WeightClass cls);

struct WitnessResult {
    WeightSeq weight;
    double value = 0.0;
    cplx lambda = 1.0;                    // modulation used (class C)
    std::vector<std::size_t> boundaries;  // block start indices (1-based)
};

// Feasible lower-bound construction: piecewise-constant unimodular weight
// with K blocks (variation <= 2(K-1)/N, so 2(K-1)/N < delta is required),
// block phases aligned, boundaries optimized by dynamic programming for
// d = 1 and equal-length splitting otherwise.
WitnessResult witness_search(const OrbitSeq& v, std::size_t N, double delta, WeightClass cls,
                             std::size_t K);

struct BruteForceResult {
    double value = 0.0;
    WeightSeq argmax;
    cplx lambda = 1.0;
    std::uint64_t nodes = 0;
};

// Exact maximum of ||(1/N) sum v_n c_n|| over weights drawn from the q-th
// roots of unity that pass the class membership test.  Explores a pruned
// DFS with the global phase fixed; a lower bound of the continuous sup.
BruteForceResult brute_force_small(const OrbitSeq& v, std::size_t N, double delta,
                                   WeightClass cls, unsigned q,
                                   std::uint64_t node_budget = 100'000'000ULL);

}  // namespace wwlab
