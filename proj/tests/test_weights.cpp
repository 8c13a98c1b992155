#include <doctest.h>

#include <numbers>
#include <random>

#include "wwlab/rng.hpp"
#include "wwlab/scenarios.hpp"
#include "wwlab/weights.hpp"

using namespace wwlab;

namespace {

OrbitSeq random_seq(std::size_t n, std::uint64_t seed, double scale = 1.0) {
    std::mt19937_64 gen(seed);
    OrbitSeq seq(1, ExactModel::Float64, "test");
    for (std::size_t i = 0; i < n; ++i) seq.push_back_scalar(scale * disk_complex(gen));
    return seq;
}

WeightSeq unimodular_weight(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    WeightSeq w;
    w.c.resize(n);
    for (auto& z : w.c) z = unit_complex(gen);
    return w;
}

// Exhaustive enumeration over the root alphabet, no pruning: the oracle the
// pruned search must reproduce.
double naive_alphabet_max(const OrbitSeq& v, std::size_t N, double delta, unsigned q) {
    std::vector<cplx> roots(q);
    for (unsigned r = 0; r < q; ++r)
        roots[r] = std::polar(1.0, 2 * std::numbers::pi * double(r) / double(q));
    std::vector<unsigned> idx(N, 0);
    double best = -1.0;
    while (true) {
        WeightSeq w;
        w.c.resize(N);
        for (std::size_t n = 0; n < N; ++n) w.c[n] = roots[idx[n]];
        if (check_I(w, delta).ok) {
            cplx acc = 0.0;
            for (std::size_t n = 1; n <= N; ++n) acc += v.row(n)[0] * w.c[n - 1];
            best = std::max(best, std::abs(acc) / double(N));
        }
        std::size_t p = 0;
        while (p < N && ++idx[p] == q) idx[p++] = 0;
        if (p == N) break;
    }
    return best;
}

}  // namespace

TEST_CASE("check_I on the named weights") {
    WeightSeq constant;
    constant.c.assign(6, cplx(1.0, 0.0));
    CHECK(check_I(constant, 1e-9).ok);

    WeightSeq alternating;
    alternating.c = {cplx(-1, 0), cplx(1, 0), cplx(-1, 0), cplx(1, 0)};
    Membership m = check_I(alternating, 0.5);
    CHECK(m.variation == doctest::Approx(1.5));  // (2+2+2)/4
    CHECK(!m.ok);

    for (std::size_t N : {8u, 16u, 32u}) {
        // c_n = lambda^n with lambda = e(1/N^2) has variation ~ 2 pi / N^2
        WeightSeq mod;
        mod.c.resize(N);
        double t = 2 * std::numbers::pi / double(N * N);
        for (std::size_t n = 1; n <= N; ++n) mod.c[n - 1] = std::polar(1.0, t * double(n));
        double expected = double(N - 1) / double(N) * 2.0 * std::sin(t / 2.0);
        Membership mm = check_I(mod, 1.0 / double(N));
        CHECK(mm.variation == doctest::Approx(expected).epsilon(1e-12));
        CHECK(mm.ok);
    }

    WeightSeq too_big;
    too_big.c = {cplx(1.5, 0.0)};
    CHECK(!check_I(too_big, 1.0).ok);
}

TEST_CASE("check_C demodulates hidden modulations and certifies misses") {
    std::size_t N = 32;
    std::size_t G = 4 * N;
    cplx lambda0 = std::polar(1.0, 2 * std::numbers::pi * 17.0 / double(G));
    WeightSeq w;
    w.c.resize(N);
    cplx pw = 1.0;
    for (auto& z : w.c) {
        pw *= lambda0;
        z = pw;
    }
    Membership m = check_C(w, 1e-6);
    CHECK(m.ok);
    CHECK(m.variation == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(m.lambda - lambda0) < 1e-12);

    WeightSeq constant;
    constant.c.assign(N, cplx(0.5, 0.5));
    CHECK(check_C(constant, 1e-6).ok);  // lambda = 1

    // iid unimodular weights: no modulation helps; verdict certified negative
    WeightSeq random = unimodular_weight(64, 5);
    Membership r = check_C(random, 0.1, 256 * 64);
    CHECK(!r.ok);
    CHECK(r.variation > 1.0);  // around 4/pi
    CHECK(r.certified);

    CHECK_THROWS_AS(check_C(random, 0.1, 64), contract_error);  // grid below 4N
}

TEST_CASE("class nesting: weights passing check_I pass check_C") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        std::mt19937_64 gen(seed);
        WeightSeq w;
        w.c.resize(24);
        cplx cur = unit_complex(gen);
        for (auto& z : w.c) {  // small random walk on the circle
            cur *= std::polar(1.0, 0.02 * (uniform01(gen) - 0.5));
            z = cur;
        }
        double delta = w.variation() + 1e-3;
        REQUIRE(check_I(w, delta).ok);
        CHECK(check_C(w, delta).ok);
    }
}

TEST_CASE("check_R on the named weights") {
    std::size_t N = 32;
    RParams p;
    p.lambda = 1.0;
    p.delta.assign(N, 0.5);
    p.k_table.assign(N, {1, 2});
    WeightSeq ones;
    ones.c.assign(N, cplx(1.0, 0.0));
    RMembership ok = check_R(ones, p);
    CHECK(ok.ok);
    CHECK(ok.chosen_k[0] == 1);  // 2/N + 0 < 0.5

    RParams flipped = p;
    flipped.lambda = -1.0;  // |lambda c_n - c_{n+k}| = 2 everywhere
    RMembership bad = check_R(ones, flipped);
    CHECK(!bad.ok);
    CHECK(bad.failed_w == 1);

    // c_n = e(n/8), lambda = e(8/8) = 1 with shift 8: exact cancellation,
    // only the boundary term 2*8/N remains
    WeightSeq periodic;
    periodic.c.resize(N);
    for (std::size_t n = 1; n <= N; ++n)
        periodic.c[n - 1] = std::polar(1.0, 2 * std::numbers::pi * double(n % 8) / 8.0);
    RParams shifts;
    shifts.lambda = 1.0;
    shifts.delta.assign(N, 2.0 * 8.0 / double(N) + 1e-6);
    shifts.k_table.assign(N, {8});
    CHECK(check_R(periodic, shifts).ok);
    shifts.delta.assign(N, 2.0 * 8.0 / double(N) - 1e-6);
    CHECK(!check_R(periodic, shifts).ok);  // boundary term enforced

    RParams invalid = p;
    invalid.k_table.assign(N, {N});
    CHECK_THROWS_AS(check_R(ones, invalid), contract_error);
    RParams shrinking = p;
    shrinking.k_table[0] = {1, 2, 3};  // b_w decreases afterwards
    CHECK_THROWS_AS(check_R(ones, shrinking), contract_error);
}

TEST_CASE("abel bound on the named sequences") {
    OrbitSeq constant(1, ExactModel::Float64, "const");
    for (int i = 0; i < 16; ++i) constant.push_back_scalar(cplx(0.0, 0.8));
    double delta = 0.25;
    // max partial sum = N ||xi||, so UB = ||xi|| (N delta + 1): sound but loose
    CHECK(abel_upper_bound(constant, 16, delta, WeightClass::I) ==
          doctest::Approx(0.8 * (16 * delta + 1)));

    OrbitSeq alternating(1, ExactModel::Float64, "alt");
    for (int i = 0; i < 8; ++i) alternating.push_back_scalar(i % 2 ? cplx(1, 0) : cplx(-1, 0));
    CHECK(abel_upper_bound(alternating, 8, delta, WeightClass::I) ==
          doctest::Approx((8 * delta + 1) / 8.0));
}

TEST_CASE("class-C abel bound dominates modulated mass") {
    // v_n = lambda0^n xi: the class-C sup is at least ||xi|| (demodulate).
    cplx lambda0 = std::polar(1.0, 0.77);
    OrbitSeq v(1, ExactModel::Float64, "mod");
    cplx pw = 1.0;
    for (int i = 0; i < 64; ++i) {
        pw *= lambda0;
        v.push_back_scalar(0.6 * pw);
    }
    double ub = abel_upper_bound(v, 64, 0.05, WeightClass::C);
    CHECK(ub >= 0.6 - 1e-9);
    // and it dominates class-I witnesses too (class C contains class I)
    WitnessResult wit = witness_search(v, 64, 0.05, WeightClass::I, 1);
    CHECK(wit.value <= ub + 1e-9);
}

TEST_CASE("witness search: one block is the plain average") {
    OrbitSeq v = random_seq(32, 8);
    WitnessResult wit = witness_search(v, 32, 0.1, WeightClass::I, 1);
    cplx acc = 0.0;
    for (std::size_t n = 1; n <= 32; ++n) acc += v.row(n)[0];
    CHECK(wit.value == doctest::Approx(std::abs(acc) / 32.0).epsilon(1e-12));
    CHECK(check_I(wit.weight, 0.1).ok);
}

TEST_CASE("witness search: two sign blocks recover the full mass") {
    OrbitSeq v(1, ExactModel::Float64, "blocks");
    for (int i = 0; i < 4; ++i) v.push_back_scalar(cplx(0.9, 0.0));
    for (int i = 0; i < 4; ++i) v.push_back_scalar(cplx(-0.9, 0.0));
    double delta = 2.0 / 8.0 + 0.05;  // two blocks feasible
    WitnessResult wit = witness_search(v, 8, delta, WeightClass::I, 2);
    CHECK(wit.value == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(check_I(wit.weight, delta).ok);
    BruteForceResult brute = brute_force_small(v, 8, delta, WeightClass::I, 16);
    CHECK(brute.value == doctest::Approx(0.9).epsilon(1e-9));

    CHECK_THROWS_AS(witness_search(v, 8, 0.1, WeightClass::I, 2), contract_error);
}

TEST_CASE("witness search on vector-valued data stays feasible and bounded") {
    std::mt19937_64 gen(99);
    OrbitSeq v(3, ExactModel::Float64, "vec");
    for (int i = 0; i < 48; ++i) {
        CVec val(3);
        for (auto& z : val.coords) z = disk_complex(gen);
        v.push_back(val);
    }
    double delta = 0.3;
    WitnessResult wit = witness_search(v, 48, delta, WeightClass::I, 5);
    CHECK(check_I(wit.weight, delta).ok);
    CHECK(wit.value <= abel_upper_bound(v, 48, delta, WeightClass::I) + 1e-9);
    // more blocks cannot hurt the certified range
    WitnessResult one = witness_search(v, 48, delta, WeightClass::I, 1);
    CHECK(wit.value >= one.value - 1e-9);
}

TEST_CASE("class-C witness is feasible and below the class-C bound") {
    OrbitSeq v = random_seq(48, 13);
    double delta = 0.2;
    WitnessResult wit = witness_search(v, 48, delta, WeightClass::C, 3);
    CHECK(check_C(wit.weight, delta).ok);
    CHECK(wit.value <= abel_upper_bound(v, 48, delta, WeightClass::C) + 1e-9);
    // at least as good as the best unmodulated witness
    WitnessResult plain = witness_search(v, 48, delta, WeightClass::I, 3);
    CHECK(wit.value >= plain.value - 1e-12);
}

TEST_CASE("brute force: single value aligns within one grid step") {
    OrbitSeq v = random_seq(1, 3);
    BruteForceResult r = brute_force_small(v, 1, 1.0, WeightClass::I, 16);
    double target = v.value_norm(1);
    CHECK(r.value <= target + 1e-12);
    CHECK(r.value >= target * std::cos(std::numbers::pi / 16.0) - 1e-12);
}

TEST_CASE("brute force: N=2 ones at delta=2, q=4") {
    OrbitSeq v(1, ExactModel::Float64, "ones");
    v.push_back_scalar(cplx(1, 0));
    v.push_back_scalar(cplx(1, 0));
    BruteForceResult r = brute_force_small(v, 2, 2.0, WeightClass::I, 4);
    CHECK(r.value == doctest::Approx(1.0));  // c = (1, 1)
    CHECK(std::abs(r.argmax.c[0] - cplx(1, 0)) < 1e-12);
    CHECK(std::abs(r.argmax.c[1] - cplx(1, 0)) < 1e-12);
}

TEST_CASE("pruned search equals the naive enumeration") {
    for (std::uint64_t seed : {3ULL, 14ULL, 15ULL, 92ULL}) {
        OrbitSeq v = random_seq(5, seed);
        for (double delta : {0.3, 0.9, 2.0}) {
            double naive = naive_alphabet_max(v, 5, delta, 8);
            BruteForceResult pruned = brute_force_small(v, 5, delta, WeightClass::I, 8);
            CHECK(pruned.value == doctest::Approx(naive).epsilon(1e-12));
        }
    }
}

TEST_CASE("brute force class C dominates class I") {
    OrbitSeq v = random_seq(6, 44);
    double delta = 0.4;
    BruteForceResult ci = brute_force_small(v, 6, delta, WeightClass::I, 8);
    BruteForceResult cc = brute_force_small(v, 6, delta, WeightClass::C, 8);
    CHECK(cc.value >= ci.value - 1e-12);
    CHECK(check_C(cc.argmax, delta).ok);
}

TEST_CASE("brute force node budget raises a resource error") {
    OrbitSeq v = random_seq(8, 5);
    CHECK_THROWS_AS(brute_force_small(v, 8, 2.0, WeightClass::I, 16, 50), resource_error);
}

TEST_CASE("delta-monotonicity of all three bounds") {
    OrbitSeq v = random_seq(8, 71);
    double lo = 0.3, hi = 0.9;
    CHECK(abel_upper_bound(v, 8, lo, WeightClass::I) <=
          abel_upper_bound(v, 8, hi, WeightClass::I) + 1e-12);
    CHECK(brute_force_small(v, 8, lo, WeightClass::I, 8).value <=
          brute_force_small(v, 8, hi, WeightClass::I, 8).value + 1e-12);
    WitnessResult wl = witness_search(v, 8, lo, WeightClass::I, 2);
    WitnessResult wh = witness_search(v, 8, hi, WeightClass::I, 3);
    CHECK(wl.value <= wh.value + 1e-12);
}

TEST_CASE("scale equivariance of values and verdicts") {
    OrbitSeq v = random_seq(8, 123);
    double s = 2.75, delta = 0.5;
    OrbitSeq sv = v.scaled(s);
    CHECK(abel_upper_bound(sv, 8, delta, WeightClass::I) ==
          doctest::Approx(s * abel_upper_bound(v, 8, delta, WeightClass::I)).epsilon(1e-12));
    WitnessResult w1 = witness_search(v, 8, delta, WeightClass::I, 2);
    WitnessResult w2 = witness_search(sv, 8, delta, WeightClass::I, 2);
    CHECK(w2.value == doctest::Approx(s * w1.value).epsilon(1e-12));
    for (std::size_t n = 0; n < 8; ++n)
        CHECK(std::abs(w1.weight.c[n] - w2.weight.c[n]) < 1e-12);  // witness unchanged
    BruteForceResult b1 = brute_force_small(v, 8, delta, WeightClass::I, 8);
    BruteForceResult b2 = brute_force_small(sv, 8, delta, WeightClass::I, 8);
    CHECK(b2.value == doctest::Approx(s * b1.value).epsilon(1e-12));
}

TEST_CASE("sandwich property on random small instances") {
    SandwichStats stats = weight_sandwich(45, 16, {0.1, 0.5, 2.0}, 2024);
    CHECK(stats.violations == 0);
    CHECK(stats.worst_witness_gap <= 1e-9);
    CHECK(stats.worst_brute_gap <= 1e-9);
}
