#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wwlab/diagnostics.hpp"
#include "wwlab/toml.hpp"
#include "wwlab/twisted.hpp"
#include "wwlab/weights.hpp"

namespace wwlab {

// ---------------------------------------------------------------------------
// Experiment kernels shared by the CLI scenarios and the acceptance suite.

// Deterministic sample points x in [0,1).
std::vector<Fix128> seeded_points(std::size_t count, std::uint64_t seed);

double median(std::vector<double> xs);

// Max over seeds/N of ||(1/N) sum M^n f(x) e(-x)^n - f(x)|| for the
// unimodular multiplication operator and random trig observables.
struct MeIdentityStats {
    double max_err = 0.0;
    std::size_t worst_seed = 0;
    std::size_t worst_N = 0;
};
MeIdentityStats me_identity_error(std::size_t n_points, long long degree,
                                  const std::vector<std::size_t>& n_list, std::uint64_t seed);

// Max over x of |(1/N) sum U^n f(x) e(p_x(n)) - 1| for the quadratic
// phase p_x(n) = -binom(n+1,2) alpha - (n+1) x.
struct PolyWeightStats {
    double max_err = 0.0;
    std::vector<double> per_point_err;
};
PolyWeightStats ualpha_polynomial_error(Fix128 alpha, std::size_t n_points, std::size_t N,
                                        std::uint64_t seed);

// Per-checkpoint certified-sup statistics over seeded Bernoulli orbits of a
// mean-zero harmonic.
struct DecayCurve {
    std::vector<std::size_t> checkpoints;
    std::vector<double> median_certified;
    std::vector<double> median_grid_max;
    std::vector<std::vector<double>> per_seed_certified;  // [checkpoint][seed]
};
DecayCurve doubling_decay_curve(const std::vector<std::size_t>& checkpoints, std::size_t seeds,
                                std::uint64_t seed0, std::size_t workers);

// grid_max per checkpoint for the rotation orbit of e(.), refined witness.
std::vector<double> rotation_control_gridmax(Fix128 alpha, Fix128 x0,
                                             const std::vector<std::size_t>& checkpoints);

// Certificate soundness sample: dense-oracle max vs [grid_max, certified].
struct SoundnessStats {
    std::size_t instances = 0;
    std::size_t violations = 0;
    double worst_low_gap = 0.0;   // max over instances of grid_max - oracle
    double worst_high_gap = 0.0;  // max over instances of oracle - certified
};
SoundnessStats certificate_soundness(std::size_t instances, std::size_t n_max,
                                     std::uint64_t seed, std::size_t workers);

// Sandwich run on random small instances (class I):
// witness <= brute + rounding slack <= abel, plus the delta = 2 recovery.
struct SandwichStats {
    std::size_t instances = 0;
    std::size_t violations = 0;
    double worst_witness_gap = 0.0;   // witness - (brute + slack)
    double worst_brute_gap = 0.0;     // brute - abel
    double worst_recovery_gap = 0.0;  // (mean |v|) - brute at delta = 2
};
SandwichStats weight_sandwich(std::size_t instances, unsigned q,
                              const std::vector<double>& deltas, std::uint64_t seed);

// Median Abel upper bound along dyadic N for delta_N = N^(-rate_exponent).
struct AbelCurve {
    std::vector<std::size_t> checkpoints;
    std::vector<double> median_ub;
};
AbelCurve abel_decay_curve(const std::vector<std::size_t>& checkpoints, double rate_exponent,
                           std::size_t seeds, std::uint64_t seed0, std::size_t workers);

// Median witness-search lower bound for the same class, used to audit how
// much of an Abel bound is slack.
double abel_witness_floor(std::size_t N, double delta, std::size_t seeds, std::uint64_t seed0,
                          std::size_t workers);

// paCb ratio families used by the falsification/verification run.
struct PacbFamilies {
    PacbReport me_indicators;       // ratios indexed by k = 0..k_max
    PacbReport contractive;         // contractive multiplier over a rotation
    PacbReport noncontractive;      // the norm-2 step multiplier composition
};
PacbFamilies pacb_families(std::size_t k_max, std::size_t N, std::uint64_t seed);

// Continued-fraction convergent denominators of a fixed-point fraction.
std::vector<std::uint64_t> convergent_denominators(Fix128 alpha, std::size_t count,
                                                   std::uint64_t max_q);

// ---------------------------------------------------------------------------
// Scenario registry.

struct Artifact {
    std::string name;
    std::string contents;
};

struct ScenarioResult {
    int exit_code = 0;  // 0 ok, 1 assertion failed
    std::vector<Artifact> artifacts;
    std::string report;
};

struct ScenarioInfo {
    std::string name;
    std::string claim;
    TomlTable defaults;
    std::function<ScenarioResult(const TomlTable&, std::size_t workers)> run;
};

const std::vector<ScenarioInfo>& scenario_registry();
const ScenarioInfo* find_scenario(const std::string& name);

// "sqrt2-1", "golden", or "p/q" with 0 <= p/q < 1.
Fix128 fraction_from_string(const std::string& text);

// Operator and observable constructed from config tables ([operator] /
// [observable] sections): variant/kind name plus parameters.
OperatorSpec operator_from_params(const TomlTable& params, const TomlTable& defaults);
Observable observable_from_params(const TomlTable& params, const TomlTable& defaults);

// Parameter lookup with defaults; missing keys in both -> config_error.
long long param_int(const TomlTable& params, const TomlTable& defaults, const std::string& key);
double param_double(const TomlTable& params, const TomlTable& defaults, const std::string& key);
std::string param_string(const TomlTable& params, const TomlTable& defaults,
                         const std::string& key);

// Runs indices 0..n-1 on up to `workers` threads; fn must only touch its own
// slot so results are identical for any worker count.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn);

std::string format_double(double x);
std::uint64_t fnv1a64(std::string_view data);

}  // namespace wwlab
