#pragma once

#include <span>
#include <vector>

#include "wwlab/orbit.hpp"

namespace wwlab {

// Two-sided estimate of sup over |lambda| = 1 of ||(1/N) sum v_n lambda^n||.
// grid_max is attained at the feasible witness grid_argmax, so it is a valid
// lower bound; certified_upper dominates the true sup via the derivative
// bound for degree-N trigonometric polynomials sampled on M points.
struct CertifiedSup {
    double grid_max = 0.0;
    cplx grid_argmax = 1.0;
    double certified_upper = 0.0;
    std::size_t grid_size = 0;
    std::size_t degree = 0;
};

struct SupOptions {
    std::size_t grid_size = 0;  // 0 => 8 N
    // Golden-section polish of the witness inside its grid cell.  Off by
    // default so grid_max stays a max over the plain equispaced grid (and
    // nests inside finer grids); turn on when a sharp lower bound is wanted.
    bool refine = false;
};

// (1/N) sum_{n<=N} v_n lambda^n, left-to-right order.
CVec twisted_average(const OrbitSeq& v, cplx lambda, std::size_t N);

CertifiedSup sup_over_circle(const OrbitSeq& v, std::size_t N, SupOptions opt = {});

std::vector<CertifiedSup> decay_profile(const OrbitSeq& v, std::span<const std::size_t> checkpoints,
                                        SupOptions opt = {});

// ||(1/N) sum v_n lambda^n|| at a single lambda = e(theta); helper shared by
// the refinement and by oracle scans in tests.
double twisted_average_norm(const OrbitSeq& v, cplx lambda, std::size_t N);

}  // namespace wwlab
