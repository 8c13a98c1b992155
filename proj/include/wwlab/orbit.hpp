#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wwlab/cvec.hpp"

namespace wwlab {

// Arithmetic model used to generate a sequence.
enum class ExactModel { ExactRational, FixedPoint128, Float64 };

const char* to_string(ExactModel m);

// Finite prefix (v_1, ..., v_N) of an operator orbit, stored coordinate-flat.
// Math indices are 1-based: value(1) is the first iterate.
class OrbitSeq {
  public:
    OrbitSeq(std::size_t dim, ExactModel model, std::string provenance = {},
             std::uint64_t seed = 0)
        : dim_(dim), model_(model), provenance_(std::move(provenance)), seed_(seed) {
        if (dim == 0) throw contract_error("OrbitSeq dim must be >= 1");
    }

    static OrbitSeq from_values(const std::vector<CVec>& values,
                                ExactModel model = ExactModel::Float64,
                                std::string provenance = {});
    // Scalar convenience (d = 1).
    static OrbitSeq from_scalars(const std::vector<cplx>& values,
                                 ExactModel model = ExactModel::Float64,
                                 std::string provenance = {});

    void reserve(std::size_t n) { flat_.reserve(n * dim_); }
    void push_back(const CVec& v) {
        if (v.dim() != dim_) throw contract_error("OrbitSeq value dimension mismatch");
        flat_.insert(flat_.end(), v.coords.begin(), v.coords.end());
    }
    void push_back_scalar(cplx z) {
        if (dim_ != 1) throw contract_error("push_back_scalar requires dim 1");
        flat_.push_back(z);
    }

    std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    ExactModel model() const { return model_; }
    const std::string& provenance() const { return provenance_; }
    std::uint64_t seed() const { return seed_; }

    std::span<const cplx> row(std::size_t n) const {  // n in [1, N]
        check_index(n);
        return {flat_.data() + (n - 1) * dim_, dim_};
    }
    CVec value(std::size_t n) const {
        auto r = row(n);
        CVec v(dim_);
        std::copy(r.begin(), r.end(), v.coords.begin());
        return v;
    }
    double value_norm(std::size_t n) const { return norm_of(row(n)); }

    // Coordinate i as a contiguous copy, for per-coordinate transforms.
    std::vector<cplx> coordinate(std::size_t i) const;

    OrbitSeq scaled(double s) const;
    OrbitSeq modulated(cplx lambda0) const;  // v_n -> lambda0^n v_n
    OrbitSeq dropped_first() const;          // (v_2, ..., v_N)

  private:
    void check_index(std::size_t n) const {
        if (n == 0 || n > size()) throw range_error("OrbitSeq index out of range");
    }

    std::size_t dim_;
    ExactModel model_;
    std::string provenance_;
    std::uint64_t seed_;
    std::vector<cplx> flat_;
};

// Running sums V[n] = v_1 + ... + v_n together with max_n ||V[n]||.
struct PartialSumProfile {
    std::vector<CVec> sums;  // sums[n-1] = V[n]
    double maxnorm = 0.0;
};

// max over 1 <= M <= N of (1/M) sum_{n<=M} ||v_n||; nondecreasing in N.
double cesaro_norm(const OrbitSeq& seq, std::size_t N);

// (1/N) sum_{n<=N} ||v_n - clip_M(v_n)|| where clip_M is the radial clip.
double dist_to_bounded(const OrbitSeq& seq, double M, std::size_t N);

PartialSumProfile partial_sums(const OrbitSeq& seq);

}  // namespace wwlab
