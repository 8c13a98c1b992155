// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Tolerances and runtime budgets are pinned here.  Run with a criterion
// number to execute just that one (the ctest registration does).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "wwlab/diagnostics.hpp"
#include "wwlab/scenarios.hpp"
#include "wwlab/twisted.hpp"
#include "wwlab/weights.hpp"

using namespace wwlab;

namespace {

int g_failures = 0;
int g_only = 0;  // 0 = run all

std::size_t workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 8u);
}

struct Criterion {
    int id;
    const char* label;
    double budget_s;

    template <typename Fn>
    void run(Fn&& fn) {
        if (g_only != 0 && g_only != id) return;
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > budget_s) {
            ok = false;
            detail += " [over runtime budget]";
        }
        std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL", id,
                    label, elapsed, budget_s, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }
};

std::vector<std::size_t> dyadic(std::size_t lo_log2, std::size_t hi_log2, std::size_t step) {
    std::vector<std::size_t> v;
    for (std::size_t e = lo_log2; e <= hi_log2; e += step) v.push_back(std::size_t(1) << e);
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_only = std::atoi(argv[1]);
    std::printf("acceptance suite (workers = %zu)\n", workers());

    Criterion{1, "modulated-average identity for the multiplication operator", 1.0}.run(
        [](std::string& detail) {
            MeIdentityStats s = me_identity_error(100, 4, {10, 100, 10000}, 20240601);
            detail = "max |avg - f(x)| = " + format_double(s.max_err);
            return s.max_err <= 1e-9;
        });

    Criterion{2, "quadratic-phase weight freezes twisted-composition averages at 1", 5.0}.run(
        [](std::string& detail) {
            PolyWeightStats s =
                ualpha_polynomial_error(Fix128::sqrt2_minus_1(), 16, 100000, 4401);
            detail = "max |avg - 1| = " + format_double(s.max_err);
            return s.max_err <= 1e-6;
        });

    Criterion{3, "exact dyadic Cesaro values 1364/4096 and 1364/8192, monotone to 1/3 and 1/6",
              1.0}
        .run([](std::string& detail) {
            auto rows = dyadic_mean_ergodicity(DyadicVariant::S, 10);
            auto rows_t = dyadic_mean_ergodicity(DyadicVariant::T, 10);
            bool ok = rows.size() == 20;
            Rational prev_hi(-1), prev_lo(-1);
            for (std::size_t i = 0; ok && i < rows.size(); ++i) {
                ok = rows[i].average == rows_t[i].average;
                Rational cap(1, BigInt(1) << (2 * rows[i].m));
                ok = ok && rows[i].gap <= cap;
                Rational& prev = (i % 2 == 0) ? prev_hi : prev_lo;
                ok = ok && rows[i].average > prev;
                prev = rows[i].average;
            }
            ok = ok && rows[8].N == 2048 && rows[8].average == Rational(1364, 4096);
            ok = ok && rows[9].N == 4096 && rows[9].average == Rational(1364, 8192);
            detail = "avg(2^11) = " + format_double(double(rows[8].average)) +
                     ", avg(2^12) = " + format_double(double(rows[9].average));
            return ok;
        });

    Criterion{4, "certified decay over modulations for the mixing orbit (32-seed medians)", 60.0}
        .run([](std::string& detail) {
            DecayCurve curve = doubling_decay_curve(dyadic(8, 16, 2), 32, 905, workers());
            bool decreasing = true;
            for (std::size_t c = 1; c < curve.median_certified.size(); ++c)
                decreasing = decreasing &&
                             curve.median_certified[c] < curve.median_certified[c - 1];
            double final_med = curve.median_certified.back();
            detail = "median certified at 2^16 = " + format_double(final_med) +
                     std::string(decreasing ? ", medians strictly decreasing"
                                            : ", medians NOT decreasing");
            return decreasing && final_med <= 0.05;
        });

    Criterion{5, "no decay for the rotation orbit: refined witness keeps the sup at 1", 5.0}.run(
        [](std::string& detail) {
            Fix128 x0 = seeded_points(1, 11)[0];
            auto gm = rotation_control_gridmax(Fix128::sqrt2_minus_1(), x0, dyadic(8, 16, 2));
            double worst = 1.0;
            for (double g : gm) worst = std::min(worst, g);
            detail = "min grid_max over checkpoints = " + format_double(worst);
            return worst >= 1.0 - 1e-9;
        });

    Criterion{6, "certificate soundness on 500 random instances (oracle inside the bracket)",
              30.0}
        .run([](std::string& detail) {
            SoundnessStats s = certificate_soundness(500, 256, 7207, workers());
            detail = "violations = " + std::to_string(s.violations) +
                     ", worst low gap = " + format_double(s.worst_low_gap) +
                     ", worst high gap = " + format_double(s.worst_high_gap);
            return s.violations == 0;
        });

    Criterion{7, "weight sandwich on 200 instances: witness <= alphabet max + slack <= Abel",
              60.0}
        .run([](std::string& detail) {
            SandwichStats s = weight_sandwich(200, 16, {0.1, 0.5, 2.0}, 3303);
            detail = "violations = " + std::to_string(s.violations) +
                     ", worst witness gap = " + format_double(s.worst_witness_gap) +
                     ", worst recovery gap = " + format_double(s.worst_recovery_gap);
            return s.violations == 0;
        });

    Criterion{8, "Abel-bound decay at delta_N = N^(-1/4): <= 0.1 at 2^16 and decreasing", 30.0}
        .run([](std::string& detail) {
            AbelCurve curve = abel_decay_curve(dyadic(8, 16, 2), 0.25, 32, 906, workers());
            bool decreasing = true;
            for (std::size_t c = 1; c < curve.median_ub.size(); ++c)
                decreasing = decreasing && curve.median_ub[c] < curve.median_ub[c - 1];
            double final_med = curve.median_ub.back();
            bool ok = decreasing && final_med <= 0.1;
            detail = "median UB at 2^16 = " + format_double(final_med) +
                     (decreasing ? ", decreasing" : ", increasing");
            if (!ok) {
                // Feasibility audit: the class itself sits above the target at
                // this rate (block-witness lower bound), so no sound upper
                // bound can reach 0.1; a faster rate does certify decay.
                double delta16 = std::pow(65536.0, -0.25);
                double witness = abel_witness_floor(65536, delta16, 9, 906, workers());
                AbelCurve fast = abel_decay_curve({65536}, 0.75, 9, 906, workers());
                detail += "; witness lower bound for the class at 2^16 = " +
                          format_double(witness) +
                          " (> 0.1: threshold unreachable by any sound bound); at rate N^-3/4 "
                          "the UB is " +
                          format_double(fast.median_ub.back());
            }
            return ok;
        });

    Criterion{9, "Cesaro-ratio families: 2^k blowup vs bounded compositions", 30.0}.run(
        [](std::string& detail) {
            PacbFamilies fams = pacb_families(16, 4096, 515);
            bool blowup = true;
            for (std::size_t k = 0; k < fams.me_indicators.ratios.size(); ++k) {
                double expect = std::pow(2.0, double(k));
                blowup = blowup &&
                         std::abs(fams.me_indicators.ratios[k] - expect) <= 1e-9 * expect;
                if (k >= 10) blowup = blowup && fams.me_indicators.ratios[k] > 1e3;
            }
            detail = "ratio at k=16 = " + format_double(fams.me_indicators.ratios[16]) +
                     ", contractive max = " + format_double(fams.contractive.max_ratio) +
                     ", noncontractive max = " + format_double(fams.noncontractive.max_ratio);
            return blowup && fams.contractive.max_ratio <= 1.1 &&
                   fams.noncontractive.max_ratio <= 2.1;
        });

    if (g_only == 0) std::printf("%d of 9 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
