#include "wwlab/systems.hpp"

#include <algorithm>
#include <cmath>

namespace wwlab {

BitStream BitStream::periodic(std::vector<std::uint8_t> pattern) {
    if (pattern.empty()) throw contract_error("BitStream::periodic: empty pattern");
    BitStream s;
    s.pattern_ = std::move(pattern);
    return s;
}

int BitStream::bit(std::uint64_t i) const {
    if (i == 0) throw range_error("BitStream bits are 1-indexed");
    std::uint64_t k = offset_ + i - 1;  // 0-based absolute index
    if (!pattern_.empty()) return pattern_[k % pattern_.size()] & 1;
    std::uint64_t word = mix_seed(seed_, k >> 6);
    return int((word >> (63 - (k & 63))) & 1);
}

Fix128 BernoulliState::point(int precision_bits) const {
    if (precision_bits < 53) throw contract_error("precision_bits must be >= 53");
    int p = std::min(precision_bits, 128);
    Fix128::u128 raw = 0;
    for (int j = 1; j <= p; ++j)
        if (bits.bit(std::uint64_t(j))) raw |= Fix128::u128(1) << (128 - j);
    return Fix128::from_raw(raw);
}

Observable Observable::trig(std::vector<CoeffTable> per_coordinate) {
    if (per_coordinate.empty()) throw contract_error("Observable needs dim >= 1");
    Observable f;
    f.coeffs_ = std::move(per_coordinate);
    for (auto& table : f.coeffs_)
        std::erase_if(table, [](const auto& kv) { return kv.second == cplx{}; });
    return f;
}

Observable Observable::harmonic(long long j, cplx coeff) {
    return trig({CoeffTable{{j, coeff}}});
}

Observable Observable::constant(const CVec& xi) {
    std::vector<CoeffTable> tables(xi.dim());
    for (std::size_t i = 0; i < xi.dim(); ++i) tables[i][0] = xi.coords[i];
    return trig(std::move(tables));
}

Observable Observable::indicator(Fix128 lo, Fix128 hi) {
    if (!(lo < hi)) throw contract_error("indicator requires lo < hi");
    Observable f;
    f.indicator_ = std::make_pair(lo, hi);
    return f;
}

Observable Observable::random_trig(std::size_t dim, long long degree, std::uint64_t seed,
                                   bool mean_zero) {
    std::mt19937_64 gen(seed);
    std::vector<CoeffTable> tables(dim);
    for (auto& table : tables)
        for (long long j = -degree; j <= degree; ++j) {
            if (mean_zero && j == 0) continue;
            table[j] = disk_complex(gen);
        }
    return trig(std::move(tables));
}

bool Observable::mean_zero() const {
    if (is_indicator()) return false;
    for (const auto& table : coeffs_) {
        auto it = table.find(0);
        if (it != table.end() && it->second != cplx{}) return false;
    }
    return true;
}

long long Observable::degree() const {
    long long deg = 0;
    for (const auto& table : coeffs_)
        for (const auto& [j, c] : table) deg = std::max(deg, std::llabs(j));
    return deg;
}

CVec Observable::eval(Fix128 x) const {
    if (is_indicator()) {
        const auto& [lo, hi] = *indicator_;
        CVec v(1);
        v.coords[0] = (lo <= x && x < hi) ? 1.0 : 0.0;
        return v;
    }
    CVec v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        cplx acc = 0.0;
        for (const auto& [j, c] : coeffs_[i]) {
            if (j == 0) {
                acc += c;
                continue;
            }
            Fix128 ph = Fix128::u128(std::uint64_t(std::llabs(j))) * x;
            acc += c * unit_phase(j > 0 ? ph : -ph);
        }
        v.coords[i] = acc;
    }
    return v;
}

std::optional<double> Observable::norm_integral_exact() const {
    if (is_indicator()) return (indicator_->second - indicator_->first).to_double();
    // Constant modulus iff every coordinate carries at most one harmonic.
    double s = 0.0;
    for (const auto& table : coeffs_) {
        if (table.size() > 1) return std::nullopt;
        if (!table.empty()) s += std::norm(table.begin()->second);
    }
    return std::sqrt(s);
}

double Observable::norm_integral(std::size_t samples) const {
    if (auto exact = norm_integral_exact()) return *exact;
    double acc = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        Fix128 x = Fix128::from_ratio(BigInt(2 * k + 1), BigInt(2 * samples));
        acc += eval(x).norm();
    }
    return acc / double(samples);
}

OrbitSeq rotation_orbit(Fix128 x0, Fix128 alpha, const Observable& f, std::size_t N) {
    if (N == 0) throw contract_error("rotation_orbit: N must be >= 1");
    OrbitSeq seq(f.dim(), ExactModel::FixedPoint128, "rotation-orbit");
    seq.reserve(N);
    Fix128 x = x0;
    for (std::size_t n = 1; n <= N; ++n) {
        x += alpha;
        seq.push_back(f.eval(x));
    }
    return seq;
}

OrbitSeq doubling_orbit(const BernoulliState& state, const Observable& f, std::size_t N,
                        int precision_bits) {
    if (N == 0) throw contract_error("doubling_orbit: N must be >= 1");
    int p = std::min(precision_bits, 128);
    OrbitSeq seq(f.dim(), ExactModel::FixedPoint128, "doubling-orbit", state.bits.seed());
    seq.reserve(N);
    // x_n = 0.b_{n+1}...b_{n+p}; shift left and inject the next bit at depth p.
    Fix128::u128 raw = 0;
    for (int j = 1; j <= p; ++j)
        if (state.bits.bit(std::uint64_t(1 + j))) raw |= Fix128::u128(1) << (128 - j);
    for (std::size_t n = 1; n <= N; ++n) {
        seq.push_back(f.eval(Fix128::from_raw(raw)));
        raw <<= 1;
        if (state.bits.bit(std::uint64_t(n + 1 + p))) raw |= Fix128::u128(1) << (128 - p);
    }
    return seq;
}

cplx trig_pairing_exact(const Observable& f, const Observable& g) {
    if (f.is_indicator() || g.is_indicator())
        throw contract_error("trig_pairing_exact requires trig polynomials");
    if (f.dim() != g.dim()) throw contract_error("pairing dimension mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        const auto& gf = g.coeffs()[i];
        for (const auto& [j, c] : f.coeffs()[i]) {
            auto it = gf.find(j);
            if (it != gf.end()) acc += c * std::conj(it->second);
        }
    }
    return acc;
}

cplx mc_pairing(const Observable& f, const Observable& g, std::size_t samples,
                std::uint64_t seed) {
    if (samples == 0) throw contract_error("mc_pairing: samples must be >= 1");
    if (!f.is_indicator() && !g.is_indicator()) return trig_pairing_exact(f, g);
    return mc_pairing_estimate(f, g, samples, seed);
}

cplx mc_pairing_estimate(const Observable& f, const Observable& g, std::size_t samples,
                         std::uint64_t seed) {
    if (samples == 0) throw contract_error("mc_pairing: samples must be >= 1");
    if (f.dim() != g.dim()) throw contract_error("pairing dimension mismatch");
    std::mt19937_64 gen(seed);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        Fix128 x = Fix128::from_double(uniform01(gen));
        acc += pairing(f.eval(x), g.eval(x));
    }
    return acc / double(samples);
}

}  // namespace wwlab
