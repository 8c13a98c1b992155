#pragma once

#include <functional>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "wwlab/bigint.hpp"
#include "wwlab/systems.hpp"

namespace wwlab {

// Measure-preserving base maps used by the composition operators.
struct MapSpec {
    enum class Kind { Rotation, Doubling };
    Kind kind = Kind::Rotation;
    Fix128 alpha;  // rotation step

    static MapSpec rotation(Fix128 alpha) { return {Kind::Rotation, alpha}; }
    static MapSpec doubling() { return {Kind::Doubling, {}}; }
};

// Point-state an orbit starts from.  Rotation maps use the fixed-point
// coordinate, the doubling map uses the Bernoulli bitstream.
struct PointState {
    Fix128 x;
    std::optional<BernoulliState> bern;

    static PointState at(Fix128 x) { return {x, std::nullopt}; }
    static PointState bernoulli(BernoulliState s) { return {{}, std::move(s)}; }
};

// scale * e(freq x)
struct HarmonicMultiplier {
    long long freq = 0;
    cplx scale = 1.0;
};

// Piecewise-constant scalar on [0,1): values[i] on [breaks[i], breaks[i+1]),
// last piece extends to 1.  breaks[0] must be 0.
struct StepMultiplier {
    std::vector<Fix128> breaks;
    std::vector<cplx> values;

    cplx at(Fix128 x) const;
};

// Dense d-by-d matrix of scalar trig polynomials, row-major entries.
struct MatrixTrigMultiplier {
    std::size_t d = 1;
    std::vector<Observable::CoeffTable> entries;  // d*d tables

    void eval(Fix128 x, std::vector<cplx>& out) const;
};

// Multiplication factor F: point -> operator on C^d, with a declared norm
// bound the instance is expected to respect.
struct Multiplier {
    std::variant<HarmonicMultiplier, StepMultiplier, MatrixTrigMultiplier> impl;
    double norm_bound = 1.0;

    static Multiplier harmonic(long long freq, cplx scale = 1.0);
    static Multiplier step(std::vector<Fix128> breaks, std::vector<cplx> values);
    static Multiplier matrix_trig(std::size_t d, std::vector<Observable::CoeffTable> entries,
                                  double bound);

    bool scalar() const { return !std::holds_alternative<MatrixTrigMultiplier>(impl); }
    std::size_t dim() const;
    cplx eval_scalar(Fix128 x) const;
    void eval_matrix(Fix128 x, std::vector<cplx>& out) const;

    // Largest sampled operator norm; the declared bound holds when this
    // does not exceed norm_bound + tol.
    double sampled_norm(std::size_t samples, std::uint64_t seed) const;
};

// F = 2i on [0,alpha), 1/(2i) on [alpha,2alpha), 1 on [2alpha,1).
Multiplier noncontractive_multiplier(Fix128 alpha);

struct Koopman {
    MapSpec map;
};
struct MultOp {
    Multiplier F;
};
struct MultKoopman {
    Multiplier F;
    MapSpec map;
};
struct TwistedU {
    Fix128 alpha;
};
struct DyadicT {};
struct DyadicS {};
struct NonContractiveS {
    Fix128 alpha;
};

using OperatorSpec =
    std::variant<Koopman, MultOp, MultKoopman, TwistedU, DyadicT, DyadicS, NonContractiveS>;

const char* variant_name(const OperatorSpec& op);

// values[n] = T^n f(x) for n = 1..N.  Dyadic variants act on mass maps, not
// points, and are rejected here.
OrbitSeq orbit_values(const OperatorSpec& op, const Observable& f, const PointState& x,
                      std::size_t N);

// Cumulative scalar multipliers m_n with T^n f(x) = m_n f(phi^n x), for the
// scalar composition variants.  Used by the pointwise contraction checks.
std::vector<cplx> cumulative_multipliers(const OperatorSpec& op, const PointState& x,
                                         std::size_t N);

// Pointwise orbit of the pairing-twisted composition
// (S g)(x) = <g(phi x), f_dual(x)> g(phi x).  Nonlinear in g: scaling the
// observable rescales every step's scalar factor, so orbits do not scale
// linearly.  Exposed for experimentation alongside the linear variants.
OrbitSeq pairing_twisted_orbit(const Observable& f_dual, const MapSpec& map,
                               const Observable& g, const PointState& x, std::size_t N);

// ---------------------------------------------------------------------------
// Dyadic operators, exact on step functions via their interval masses.
// Index k stands for I_k = [2^{-k-1}, 2^{-k}); the stored value is the exact
// integral of the function over I_k.

enum class DyadicVariant { T, S };

struct DyadicMass {
    std::map<BigInt, Rational> mass;

    Rational total() const;
    Rational total_variation() const;  // sum |mass|
};

// Mass transport: S moves index k to k+1, T moves k to (k+1)^2; the mass
// itself is preserved (the operators preserve interval integrals).
DyadicMass dyadic_apply(DyadicVariant v, const DyadicMass& m);

// Sum of masses over indices selected by the predicate; exact.
Rational dyadic_pairing(const DyadicMass& m, const std::function<bool(const BigInt&)>& g_indices);

// a_1 = 1; a_n = (a_{n-1}+1)^2 for T, a_n = a_{n-1}+1 for S.  T indices grow
// doubly exponentially, so n is capped.
BigInt index_sequence(DyadicVariant v, std::size_t n, std::size_t cap = 24);

// Step height on I_k reconstructed from the interval mass (display only:
// the operators themselves are tracked through masses, which are exact).
Rational dyadic_pointwise_value(const DyadicMass& m, const BigInt& k);

// n in B = union over m >= 1 of [4^m, 2*4^m).
bool in_dyadic_block_set(std::size_t n);

// Indicator selection used by the non-mean-ergodic pairing: k is selected
// iff k = a_b for some b in B.
std::function<bool(const BigInt&)> block_set_predicate(DyadicVariant v, std::size_t cap = 24);

}  // namespace wwlab
