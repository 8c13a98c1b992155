#include "wwlab/orbit.hpp"

#include <algorithm>

namespace wwlab {

const char* to_string(ExactModel m) {
    switch (m) {
        case ExactModel::ExactRational: return "exact-rational";
        case ExactModel::FixedPoint128: return "fixed-point-128";
        case ExactModel::Float64: return "float64";
    }
    return "?";
}

OrbitSeq OrbitSeq::from_values(const std::vector<CVec>& values, ExactModel model,
                               std::string provenance) {
    if (values.empty()) throw contract_error("OrbitSeq needs at least one value");
    OrbitSeq seq(values.front().dim(), model, std::move(provenance));
    seq.reserve(values.size());
    for (const CVec& v : values) seq.push_back(v);
    return seq;
}

OrbitSeq OrbitSeq::from_scalars(const std::vector<cplx>& values, ExactModel model,
                                std::string provenance) {
    if (values.empty()) throw contract_error("OrbitSeq needs at least one value");
    OrbitSeq seq(1, model, std::move(provenance));
    seq.flat_ = values;
    return seq;
}

std::vector<cplx> OrbitSeq::coordinate(std::size_t i) const {
    if (i >= dim_) throw range_error("coordinate index out of range");
    std::vector<cplx> out(size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = flat_[n * dim_ + i];
    return out;
}

OrbitSeq OrbitSeq::scaled(double s) const {
    OrbitSeq out = *this;
    for (cplx& z : out.flat_) z *= s;
    return out;
}

OrbitSeq OrbitSeq::modulated(cplx lambda0) const {
    OrbitSeq out = *this;
    cplx pw = 1.0;
    for (std::size_t n = 0; n < size(); ++n) {
        pw *= lambda0;
        for (std::size_t i = 0; i < dim_; ++i) out.flat_[n * dim_ + i] = flat_[n * dim_ + i] * pw;
    }
    return out;
}

OrbitSeq OrbitSeq::dropped_first() const {
    if (size() < 2) throw range_error("dropped_first needs length >= 2");
    OrbitSeq out(dim_, model_, provenance_, seed_);
    out.flat_.assign(flat_.begin() + long(dim_), flat_.end());
    return out;
}

double cesaro_norm(const OrbitSeq& seq, std::size_t N) {
    if (N == 0 || N > seq.size()) throw range_error("cesaro_norm: N out of range");
    double best = 0.0, acc = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        acc += seq.value_norm(n);
        best = std::max(best, acc / double(n));
    }
    return best;
}

double dist_to_bounded(const OrbitSeq& seq, double M, std::size_t N) {
    if (M < 0.0) throw contract_error("dist_to_bounded: M must be >= 0");
    if (N == 0 || N > seq.size()) throw range_error("dist_to_bounded: N out of range");
    double acc = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        double nn = seq.value_norm(n);
        acc += std::max(0.0, nn - M);  // ||v - clip_M(v)|| for the radial clip
    }
    return acc / double(N);
}

PartialSumProfile partial_sums(const OrbitSeq& seq) {
    PartialSumProfile prof;
    prof.sums.reserve(seq.size());
    CVec acc(seq.dim());
    for (std::size_t n = 1; n <= seq.size(); ++n) {
        acc += seq.value(n);
        prof.sums.push_back(acc);
        prof.maxnorm = std::max(prof.maxnorm, acc.norm());
    }
    return prof;
}

}  // namespace wwlab
