#include "wwlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wwlab/twisted.hpp"

namespace wwlab {

namespace {

cplx circle_point(std::size_t j, std::size_t G) {
    double t = 2.0 * std::numbers::pi * double(j) / double(G);
    return {std::cos(t), std::sin(t)};
}

double demodulated_variation(const std::vector<cplx>& c, cplx lambda) {
    double s = 0.0;
    for (std::size_t n = 0; n + 1 < c.size(); ++n) s += std::abs(lambda * c[n] - c[n + 1]);
    return s / double(c.size());
}

// ||(1/N) sum over block-weighted v|| given block sums and phases.
double weighted_value(const OrbitSeq& v, const WeightSeq& w, std::size_t N) {
    CVec acc(v.dim());
    for (std::size_t n = 1; n <= N; ++n) {
        auto row = v.row(n);
        for (std::size_t i = 0; i < v.dim(); ++i) acc.coords[i] += row[i] * w.c[n - 1];
    }
    return acc.norm() / double(N);
}

}  // namespace

double WeightSeq::variation() const {
    if (c.empty()) return 0.0;
    return demodulated_variation(c, cplx(1.0, 0.0));
}

double WeightSeq::max_modulus() const {
    double m = 0.0;
    for (cplx z : c) m = std::max(m, std::abs(z));
    return m;
}

Membership check_I(const WeightSeq& c, double delta) {
    Membership r;
    r.lambda = 1.0;
    r.variation = c.variation();
    r.slack = 0.0;
    r.certified = true;
    r.ok = r.variation < delta && c.max_modulus() <= 1.0 + kModulusTol;
    return r;
}

Membership check_C(const WeightSeq& c, double delta, std::size_t lambda_grid) {
    const std::size_t N = c.size();
    if (N == 0) throw contract_error("check_C: empty weight");
    std::size_t G = lambda_grid == 0 ? 4 * N : lambda_grid;
    if (G < 4 * N) throw contract_error("check_C: lambda grid must have >= 4N points");
    Membership r;
    r.variation = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < G; ++j) {
        cplx lam = circle_point(j, G);
        double var = demodulated_variation(c.c, lam);
        if (var < r.variation) {
            r.variation = var;
            r.lambda = lam;
        }
    }
    // Between grid points the variation moves by at most |lambda - lambda'|
    // times the mean weight modulus.
    double mean_mod = 0.0;
    for (std::size_t n = 0; n + 1 < N; ++n) mean_mod += std::abs(c.c[n]);
    mean_mod /= double(N);
    r.slack = std::numbers::pi / double(G) * mean_mod;
    bool mod_ok = c.max_modulus() <= 1.0 + kModulusTol;
    r.ok = r.variation < delta && mod_ok;
    r.certified = r.ok || r.variation - r.slack >= delta || !mod_ok;
    return r;
}

RMembership check_R(const WeightSeq& c, const RParams& p) {
    const std::size_t N = c.size();
    if (N == 0) throw contract_error("check_R: empty weight");
    if (std::abs(std::abs(p.lambda) - 1.0) > kModulusTol)
        throw contract_error("check_R: lambda must be unimodular");
    if (p.delta.size() < N || p.k_table.size() < N)
        throw contract_error("check_R: delta and k_table must cover w = 1..N");
    for (std::size_t w = 1; w < N; ++w)
        if (p.k_table[w].size() < p.k_table[w - 1].size())
            throw contract_error("check_R: b_w must be nondecreasing");
    RMembership r;
    r.chosen_k.assign(N, 0);
    for (std::size_t w = 1; w <= N; ++w) {
        bool found = false;
        for (std::size_t k : p.k_table[w - 1]) {
            if (k == 0 || k >= N) throw contract_error("check_R: shifts must satisfy 1 <= k < N");
            double s = 0.0;
            for (std::size_t n = 1; n + k <= N; ++n)
                s += std::abs(p.lambda * c.c[n - 1] - c.c[n + k - 1]);
            double lhs = 2.0 * double(k) / double(N) + s / double(N);
            if (lhs < p.delta[w - 1]) {
                r.chosen_k[w - 1] = k;
                found = true;
                break;
            }
        }
        if (!found) {
            r.ok = false;
            r.failed_w = w;
            return r;
        }
    }
    r.ok = c.max_modulus() <= 1.0 + kModulusTol;
    r.failed_w = 0;
    return r;
}

double abel_upper_bound(const OrbitSeq& v, std::size_t N, double delta, WeightClass cls) {
    if (N == 0 || N > v.size()) throw range_error("abel_upper_bound: N out of range");
    double max_ps = 0.0;
    if (cls == WeightClass::I) {
        CVec acc(v.dim());
        for (std::size_t n = 1; n <= N; ++n) {
            acc += v.value(n);
            max_ps = std::max(max_ps, acc.norm());
        }
    } else {
        // Certified sup over modulations of max_n ||sum_{k<=n} v_k lambda^k||:
        // exact certificates at dyadic n, triangle-inequality bridge between.
        std::vector<std::size_t> grid;
        for (std::size_t n = 1; n < N; n *= 2) grid.push_back(n);
        grid.push_back(N);
        std::vector<double> norms(N + 1, 0.0);
        for (std::size_t n = 1; n <= N; ++n) norms[n] = v.value_norm(n);
        std::size_t prev = 0;
        for (std::size_t n2 : grid) {
            double cert = double(n2) * sup_over_circle(v, n2).certified_upper;
            double tail = 0.0;  // worst over n in (prev, n2] of sum_{k=n+1}^{n2} ||v_k||
            for (std::size_t k = prev + 2; k <= n2; ++k) tail += norms[k];
            max_ps = std::max(max_ps, cert + tail);
            prev = n2;
        }
    }
    return max_ps / double(N) * (double(N) * delta + 1.0);
}

namespace {

struct BlockPlan {
    std::vector<std::size_t> starts;  // 1-based start of each block
};

// Maximize sum of block partial-sum norms over partitions into K blocks
// (d = 1, exact DP).  prefix[n] = v_1 + ... + v_n.
BlockPlan dp_blocks(const std::vector<cplx>& prefix, std::size_t N, std::size_t K) {
    std::vector<std::vector<double>> best(K + 1, std::vector<double>(N + 1, -1.0));
    std::vector<std::vector<std::size_t>> from(K + 1, std::vector<std::size_t>(N + 1, 0));
    for (std::size_t n = 1; n <= N; ++n) best[1][n] = std::abs(prefix[n]);
    for (std::size_t k = 2; k <= K; ++k)
        for (std::size_t n = k; n <= N; ++n)
            for (std::size_t m = k - 1; m < n; ++m) {
                double cand = best[k - 1][m] + std::abs(prefix[n] - prefix[m]);
                if (cand > best[k][n]) {
                    best[k][n] = cand;
                    from[k][n] = m;
                }
            }
    BlockPlan plan;
    std::size_t n = N;
    std::vector<std::size_t> cuts;
    for (std::size_t k = K; k >= 2; --k) {
        n = from[k][n];
        cuts.push_back(n);
    }
    plan.starts.push_back(1);
    for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) plan.starts.push_back(*it + 1);
    return plan;
}

BlockPlan equal_blocks(std::size_t N, std::size_t K) {
    BlockPlan plan;
    for (std::size_t b = 0; b < K; ++b) plan.starts.push_back(1 + b * N / K);
    std::sort(plan.starts.begin(), plan.starts.end());
    plan.starts.erase(std::unique(plan.starts.begin(), plan.starts.end()), plan.starts.end());
    return plan;
}

WitnessResult witness_for_blocks(const OrbitSeq& v, std::size_t N, const BlockPlan& plan,
                                 cplx lambda, bool modulated) {
    const std::size_t d = v.dim();
    const std::size_t K = plan.starts.size();
    // Block sums of the (optionally modulated) sequence.
    std::vector<CVec> sums(K, CVec(d));
    cplx pw = 1.0;
    std::size_t b = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        pw *= lambda;
        while (b + 1 < K && n >= plan.starts[b + 1]) ++b;
        auto row = v.row(n);
        cplx mod = modulated ? pw : cplx(1.0, 0.0);
        for (std::size_t i = 0; i < d; ++i) sums[b].coords[i] += row[i] * mod;
    }
    // Phases: exact alignment for d = 1, greedy alignment otherwise
    // (largest blocks first).
    std::vector<cplx> phase(K, cplx(1.0, 0.0));
    if (d == 1) {
        for (std::size_t i = 0; i < K; ++i) {
            cplx s = sums[i].coords[0];
            phase[i] = std::abs(s) == 0.0 ? cplx(1.0, 0.0) : std::conj(s) / std::abs(s);
        }
    } else {
        std::vector<std::size_t> order(K);
        for (std::size_t i = 0; i < K; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t bb) {
            return sums[a].norm() > sums[bb].norm();
        });
        CVec acc(d);
        for (std::size_t idx : order) {
            cplx p = pairing(sums[idx], acc);
            phase[idx] = std::abs(p) == 0.0 ? cplx(1.0, 0.0) : std::conj(p) / std::abs(p);
            acc += sums[idx] * phase[idx];
        }
    }
    WitnessResult res;
    res.lambda = lambda;
    res.boundaries = plan.starts;
    res.weight.c.resize(N);
    pw = 1.0;
    b = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        pw *= lambda;
        while (b + 1 < K && n >= plan.starts[b + 1]) ++b;
        res.weight.c[n - 1] = (modulated ? pw : cplx(1.0, 0.0)) * phase[b];
    }
    res.value = weighted_value(v, res.weight, N);
    return res;
}

}  // namespace

WitnessResult witness_search(const OrbitSeq& v, std::size_t N, double delta, WeightClass cls,
                             std::size_t K) {
    if (N == 0 || N > v.size()) throw range_error("witness_search: N out of range");
    if (K == 0 || K > N) throw contract_error("witness_search: need 1 <= K <= N");
    if (2.0 * double(K - 1) / double(N) >= delta)
        throw contract_error("witness_search: K blocks infeasible for this delta");

    auto plan_for = [&](const std::vector<cplx>& prefix) {
        bool use_dp = v.dim() == 1 && N <= 2048 && N * N * K <= (std::size_t(1) << 26);
        return use_dp ? dp_blocks(prefix, N, K) : equal_blocks(N, K);
    };

    if (cls == WeightClass::I) {
        std::vector<cplx> prefix(N + 1, cplx{});
        if (v.dim() == 1)
            for (std::size_t n = 1; n <= N; ++n) prefix[n] = prefix[n - 1] + v.row(n)[0];
        return witness_for_blocks(v, N, plan_for(prefix), cplx(1.0, 0.0), false);
    }

    // Class C: outer demodulation grid, same grid convention as check_C.
    std::size_t G = 4 * N;
    if (std::size_t(G) * N > (std::size_t(1) << 28))
        throw resource_error("witness_search: class-C grid too large for this N");
    WitnessResult best;
    best.value = -1.0;
    for (std::size_t j = 0; j < G; ++j) {
        cplx lam = circle_point(j, G);
        std::vector<cplx> prefix(N + 1, cplx{});
        if (v.dim() == 1) {
            cplx pw = 1.0;
            for (std::size_t n = 1; n <= N; ++n) {
                pw *= lam;
                prefix[n] = prefix[n - 1] + v.row(n)[0] * pw;
            }
        }
        WitnessResult cand = witness_for_blocks(v, N, plan_for(prefix), lam, true);
        if (cand.value > best.value) best = cand;
    }
    return best;
}

BruteForceResult brute_force_small(const OrbitSeq& v, std::size_t N, double delta,
                                   WeightClass cls, unsigned q, std::uint64_t node_budget) {
    if (N == 0 || N > v.size()) throw range_error("brute_force_small: N out of range");
    if (q < 2) throw contract_error("brute_force_small: q must be >= 2");
    const std::size_t d = v.dim();

    std::vector<cplx> roots(q);
    for (unsigned r = 0; r < q; ++r) roots[r] = circle_point(r, q);

    // Suffix norm sums for the optimistic value bound.
    std::vector<double> suffix(N + 2, 0.0);
    for (std::size_t n = N; n >= 1; --n) suffix[n] = suffix[n + 1] + v.value_norm(n);

    struct Search {
        const OrbitSeq& v;
        std::size_t N, d;
        const std::vector<cplx>& roots;
        const std::vector<double>& suffix;
        double var_budget;  // N * delta, strict
        std::uint64_t budget, nodes = 0;
        double best = -1.0;
        std::vector<cplx> cur, best_c;
        std::vector<cplx> modulation;  // lambda^n premultipliers (class C inner run)

        void run() {
            cur.assign(N, cplx{});
            CVec partial(d);
            cur[0] = 1.0;  // global phase fixed
            add(partial, 1, cur[0]);
            dfs(2, partial, 0.0);
        }
        void add(CVec& acc, std::size_t n, cplx c) {
            auto row = v.row(n);
            cplx mod = modulation.empty() ? c : c * modulation[n - 1];
            for (std::size_t i = 0; i < d; ++i) acc.coords[i] += row[i] * mod;
        }
        void dfs(std::size_t n, const CVec& partial, double var_used) {
            if (++nodes > budget)
                throw resource_error("brute_force_small: node budget exceeded");
            if (n > N) {
                double val = partial.norm() / double(N);
                if (val > best) {
                    best = val;
                    best_c = cur;
                }
                return;
            }
            double pn = partial.norm();
            if (pn + suffix[n] <= best * double(N)) return;  // cannot improve
            // Children ordered greedily by resulting partial norm.
            struct Child {
                double key;
                unsigned r;
            };
            std::vector<Child> children;
            children.reserve(roots.size());
            for (unsigned r = 0; r < roots.size(); ++r) {
                double jump = std::abs(cur[n - 2] - roots[r]);
                if (var_used + jump >= var_budget) continue;
                CVec next = partial;
                add(next, n, roots[r]);
                children.push_back({next.norm(), r});
            }
            std::stable_sort(children.begin(), children.end(),
                             [](const Child& a, const Child& b) { return a.key > b.key; });
            for (const Child& ch : children) {
                cur[n - 1] = roots[ch.r];
                CVec next = partial;
                add(next, n, roots[ch.r]);
                dfs(n + 1, next, var_used + std::abs(cur[n - 2] - roots[ch.r]));
            }
        }
    };

    auto run_I = [&](const std::vector<cplx>& modulation) {
        Search s{v, N, d, roots, suffix, double(N) * delta, node_budget, 0, -1.0, {}, {}, {}};
        s.modulation = modulation;
        s.run();
        return s;
    };

    BruteForceResult out;
    if (cls == WeightClass::I) {
        Search s = run_I({});
        out.value = std::max(0.0, s.best);
        out.argmax.c = s.best_c;
        out.nodes = s.nodes;
        return out;
    }
    // Class C = modulations of class I: scan the lambda grid, reusing the
    // class-I search on the modulated sequence.
    std::size_t G = 4 * N;
    std::uint64_t used = 0;
    out.value = -1.0;
    for (std::size_t j = 0; j < G; ++j) {
        if (used >= node_budget)
            throw resource_error("brute_force_small: node budget exceeded");
        cplx lam = circle_point(j, G);
        std::vector<cplx> modulation(N);
        cplx pw = 1.0;
        for (std::size_t n = 0; n < N; ++n) {
            pw *= lam;
            modulation[n] = pw;
        }
        Search s{v, N, d, roots, suffix, double(N) * delta, node_budget - used, 0, -1.0, {}, {}, {}};
        s.modulation = modulation;
        s.run();
        used += s.nodes;
        if (s.best > out.value) {
            out.value = s.best;
            out.lambda = lam;
            out.argmax.c.resize(N);
            for (std::size_t n = 0; n < N; ++n) out.argmax.c[n] = s.best_c[n] * modulation[n];
        }
    }
    out.nodes = used;
    out.value = std::max(0.0, out.value);
    return out;
}

}  // namespace wwlab
