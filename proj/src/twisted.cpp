#include "wwlab/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wwlab/fft.hpp"

namespace wwlab {

namespace {

constexpr double kUnimodularTol = 1e-12;

void require_unimodular(cplx lambda) {
    if (std::abs(std::abs(lambda) - 1.0) > kUnimodularTol)
        throw contract_error("lambda must lie on the unit circle");
}

std::size_t min_grid(std::size_t N) {
    return std::size_t(std::ceil(std::numbers::pi * double(N))) + 2;
}

}  // namespace

CVec twisted_average(const OrbitSeq& v, cplx lambda, std::size_t N) {
    require_unimodular(lambda);
    if (N == 0 || N > v.size()) throw range_error("twisted_average: N out of range");
    CVec acc(v.dim());
    cplx pw = 1.0;
    for (std::size_t n = 1; n <= N; ++n) {
        pw *= lambda;
        auto row = v.row(n);
        for (std::size_t i = 0; i < v.dim(); ++i) acc.coords[i] += row[i] * pw;
    }
    acc *= cplx(1.0 / double(N), 0.0);
    return acc;
}

double twisted_average_norm(const OrbitSeq& v, cplx lambda, std::size_t N) {
    return twisted_average(v, lambda, N).norm();
}

CertifiedSup sup_over_circle(const OrbitSeq& v, std::size_t N, SupOptions opt) {
    if (N == 0 || N > v.size()) throw range_error("sup_over_circle: N out of range");
    std::size_t M = opt.grid_size == 0 ? 8 * N : opt.grid_size;
    if (M <= min_grid(N))
        throw contract_error("sup_over_circle: grid must exceed ceil(pi N) + 1 points");

    const std::size_t d = v.dim();
    // Per-coordinate values of (1/N) sum v_n lambda^n on the M-point grid.
    std::vector<std::vector<cplx>> grids(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<cplx> coeff(N + 1, cplx{});
        auto col = v.coordinate(i);
        for (std::size_t n = 1; n <= N; ++n) coeff[n] = col[n - 1] / double(N);
        grids[i] = circle_eval(coeff, M);
    }

    CertifiedSup out;
    out.grid_size = M;
    out.degree = N;
    std::size_t argmax_j = 0;
    double coord_sq = 0.0;  // sum over coordinates of (grid sup of |P_i|)^2
    for (std::size_t i = 0; i < d; ++i) {
        double gi = 0.0;
        for (std::size_t j = 0; j < M; ++j) gi = std::max(gi, std::abs(grids[i][j]));
        coord_sq += gi * gi;
    }
    for (std::size_t j = 0; j < M; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) s += std::norm(grids[i][j]);
        s = std::sqrt(s);
        if (s > out.grid_max) {
            out.grid_max = s;
            argmax_j = j;
        }
    }
    double theta = 2.0 * std::numbers::pi * double(argmax_j) / double(M);
    out.grid_argmax = {std::cos(theta), std::sin(theta)};

    // Bernstein: |P_i'| <= N sup|P_i|, so between grid points of spacing
    // 2 pi / M the coordinate sup loses at most the factor 1/(1 - pi N / M).
    double denom = 1.0 - std::numbers::pi * double(N) / double(M);
    out.certified_upper = std::sqrt(coord_sq) / denom;

    if (opt.refine) {
        // Golden-section polish inside the bracket around the argmax; keeps
        // the best evaluated point, so the result stays a feasible witness.
        double h = 2.0 * std::numbers::pi / double(M);
        double lo = theta - h, hi = theta + h;
        auto eval = [&](double t) {
            return twisted_average_norm(v, {std::cos(t), std::sin(t)}, N);
        };
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = lo, b = hi;
        double t1 = b - gr * (b - a), t2 = a + gr * (b - a);
        double f1 = eval(t1), f2 = eval(t2);
        double best_t = theta, best_f = out.grid_max;
        for (int it = 0; it < 90 && (b - a) > 1e-15; ++it) {
            if (f1 > best_f) { best_f = f1; best_t = t1; }
            if (f2 > best_f) { best_f = f2; best_t = t2; }
            if (f1 < f2) {
                a = t1; t1 = t2; f1 = f2;
                t2 = a + gr * (b - a); f2 = eval(t2);
            } else {
                b = t2; t2 = t1; f2 = f1;
                t1 = b - gr * (b - a); f1 = eval(t1);
            }
        }
        if (best_f > out.grid_max) {
            out.grid_max = best_f;
            out.grid_argmax = {std::cos(best_t), std::sin(best_t)};
        }
        // certified_upper stays the equispaced-grid certificate: the true sup
        // dominates the refined witness, so the invariant grid_max <=
        // certified_upper is preserved.
        out.certified_upper = std::max(out.certified_upper, out.grid_max);
    }
    return out;
}

std::vector<CertifiedSup> decay_profile(const OrbitSeq& v,
                                        std::span<const std::size_t> checkpoints,
                                        SupOptions opt) {
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw contract_error("decay_profile: checkpoints must be ascending");
    std::vector<CertifiedSup> out;
    out.reserve(checkpoints.size());
    for (std::size_t N : checkpoints) out.push_back(sup_over_circle(v, N, opt));
    return out;
}

}  // namespace wwlab
