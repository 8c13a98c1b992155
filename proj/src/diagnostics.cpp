#include "wwlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace wwlab {

namespace {

using CoeffTable = Observable::CoeffTable;

// One application of the operator to a coefficient table, for the variants
// whose action stays inside trigonometric polynomials.  max_keep prunes
// frequencies that can never pair with g again (they evolve monotonically
// away from g's band).
struct CoeffAction {
    enum class Kind { RotationStep, DoublingStep, Shift } kind;
    Fix128 alpha;     // RotationStep
    long long shift;  // Shift: freq -> freq + shift with phase e(j alpha) and scale
    cplx scale = 1.0;

    void apply(std::vector<CoeffTable>& tables, long long max_keep) const {
        for (auto& table : tables) {
            CoeffTable next;
            for (const auto& [j, c] : table) {
                if (kind == Kind::RotationStep) {
                    next[j] = c * phase(j);
                } else if (kind == Kind::DoublingStep) {
                    if (std::llabs(2 * j) <= max_keep || j == 0) next[2 * j] += c;
                } else {
                    long long t = j + shift;
                    // drifting frequencies never re-enter g's band once past it
                    bool keep = shift >= 0 ? t <= max_keep : t >= -max_keep;
                    if (keep) next[t] += scale * c * phase(j);
                }
            }
            table = std::move(next);
        }
    }
    cplx phase(long long j) const {
        if (j == 0 || !(kind == Kind::RotationStep || kind == Kind::Shift)) return 1.0;
        Fix128 ph = Fix128::u128(std::uint64_t(std::llabs(j))) * alpha;
        return unit_phase(j > 0 ? ph : -ph);
    }
};

std::optional<CoeffAction> coefficient_action(const OperatorSpec& op) {
    if (const auto* k = std::get_if<Koopman>(&op)) {
        if (k->map.kind == MapSpec::Kind::Rotation)
            return CoeffAction{CoeffAction::Kind::RotationStep, k->map.alpha, 0, 1.0};
        return CoeffAction{CoeffAction::Kind::DoublingStep, {}, 0, 1.0};
    }
    if (const auto* m = std::get_if<MultOp>(&op)) {
        if (const auto* h = std::get_if<HarmonicMultiplier>(&m->F.impl))
            return CoeffAction{CoeffAction::Kind::Shift, Fix128{}, h->freq, h->scale};
        return std::nullopt;
    }
    if (const auto* mk = std::get_if<MultKoopman>(&op)) {
        if (mk->map.kind != MapSpec::Kind::Rotation) return std::nullopt;
        if (const auto* h = std::get_if<HarmonicMultiplier>(&mk->F.impl))
            return CoeffAction{CoeffAction::Kind::Shift, mk->map.alpha, h->freq, h->scale};
        return std::nullopt;
    }
    if (const auto* tu = std::get_if<TwistedU>(&op))
        return CoeffAction{CoeffAction::Kind::Shift, tu->alpha, 1, 1.0};
    return std::nullopt;
}

cplx table_pairing(const std::vector<CoeffTable>& f, const std::vector<CoeffTable>& g) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& gt = g[i];
        for (const auto& [j, c] : f[i]) {
            auto it = gt.find(j);
            if (it != gt.end()) acc += c * std::conj(it->second);
        }
    }
    return acc;
}

// Sampled pairings: for each sample point walk the orbit once, accumulating
// the cumulative multiplier, and deposit into every horizon.
std::vector<cplx> sampled_pairings(const OperatorSpec& op, const Observable& f,
                                   const Observable& g, std::size_t H, std::size_t samples) {
    std::vector<cplx> acc(H, cplx{});
    for (std::size_t s = 0; s < samples; ++s) {
        Fix128 x0 = Fix128::from_ratio(BigInt(2 * s + 1), BigInt(2 * samples));
        PointState state = PointState::at(x0);
        OrbitSeq orbit = orbit_values(op, f, state, H);
        CVec gx = g.eval(x0);
        for (std::size_t h = 1; h <= H; ++h) acc[h - 1] += pairing(orbit.value(h), gx);
    }
    for (cplx& z : acc) z /= double(samples);
    return acc;
}

}  // namespace

std::vector<cplx> pairing_sequence(const OperatorSpec& op, const Observable& f,
                                   const Observable& g, std::size_t H,
                                   std::size_t mc_samples, bool* exact_out) {
    if (H == 0) throw contract_error("pairing_sequence: H must be >= 1");
    if (std::holds_alternative<DyadicT>(op) || std::holds_alternative<DyadicS>(op))
        throw contract_error("pairing_sequence: dyadic variants pair via mass maps");
    auto action = coefficient_action(op);
    if (action && !f.is_indicator() && !g.is_indicator() && f.dim() == g.dim()) {
        if (exact_out) *exact_out = true;
        std::vector<CoeffTable> cur = f.coeffs();
        long long keep = g.degree();
        std::vector<cplx> out;
        out.reserve(H);
        for (std::size_t h = 1; h <= H; ++h) {
            action->apply(cur, keep);
            out.push_back(table_pairing(cur, g.coeffs()));
        }
        return out;
    }
    if (exact_out) *exact_out = false;
    return sampled_pairings(op, f, g, H, mc_samples);
}

MixingProfile mixing_profile(const OperatorSpec& op, const Observable& f, const Observable& g,
                             std::size_t H_max, std::size_t mc_samples) {
    if (H_max < 16) throw contract_error("mixing_profile: H_max must be >= 16");
    MixingProfile prof;
    prof.pairings = pairing_sequence(op, f, g, H_max, mc_samples, &prof.exact);
    if (!prof.exact) prof.standard_error = 1.0 / std::sqrt(double(mc_samples));
    for (std::size_t H = 16; H <= H_max; H *= 2) {
        cplx erg = 0.0;
        double abs_acc = 0.0, tail = 0.0;
        for (std::size_t h = 1; h <= H; ++h) {
            cplx p = prof.pairings[h - 1];
            erg += p;
            abs_acc += std::abs(p);
            if (2 * h > H) tail = std::max(tail, std::abs(p));
        }
        prof.horizons.push_back(H);
        prof.ergodic_avg.push_back(erg / double(H));
        prof.abs_avg.push_back(abs_acc / double(H));
        prof.tail_sup.push_back(tail);
    }
    return prof;
}

std::string profile_to_csv(const MixingProfile& profile) {
    std::string out = "H,ergodic_avg_re,ergodic_avg_im,abs_avg,tail_sup\n";
    char buf[256];
    for (std::size_t i = 0; i < profile.horizons.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", profile.horizons[i],
                      profile.ergodic_avg[i].real(), profile.ergodic_avg[i].imag(),
                      profile.abs_avg[i], profile.tail_sup[i]);
        out += buf;
    }
    return out;
}

FSSet FSSet::build(std::vector<std::size_t> generators, std::size_t depth) {
    if (depth == 0 || depth > generators.size())
        throw contract_error("FSSet: depth must be in [1, #generators]");
    if (depth > 24) throw resource_error("FSSet: depth capped at 24");
    std::set<std::size_t> sums;
    for (std::size_t mask = 1; mask < (std::size_t(1) << depth); ++mask) {
        std::size_t s = 0;
        for (std::size_t k = 0; k < depth; ++k)
            if (mask & (std::size_t(1) << k)) s += generators[k];
        sums.insert(s);
    }
    FSSet fs;
    fs.generators = std::move(generators);
    fs.depth = depth;
    fs.elements.assign(sums.begin(), sums.end());
    return fs;
}

ProbeResult mild_mixing_probe(const OperatorSpec& op, const Observable& f, const Observable& g,
                              const FSSet& fs, std::size_t mc_samples) {
    if (fs.elements.empty()) throw contract_error("mild_mixing_probe: empty FS set");
    std::size_t H = fs.elements.back();
    auto pairings = pairing_sequence(op, f, g, H, mc_samples);
    ProbeResult res;
    for (std::size_t h : fs.elements) {
        double a = std::abs(pairings[h - 1]);
        if (a > res.max_abs) {
            res.max_abs = a;
            res.argmax_h = h;
        }
    }
    return res;
}

PacbReport pacb_ratio(const OperatorSpec& op, const std::vector<Observable>& f_family,
                      const std::vector<PointState>& x_samples, std::size_t N) {
    if (f_family.empty() || x_samples.empty())
        throw contract_error("pacb_ratio: need at least one observable and sample");
    PacbReport rep;
    rep.ratios.reserve(f_family.size());
    for (std::size_t i = 0; i < f_family.size(); ++i) {
        double denom = f_family[i].norm_integral();
        if (!(denom > 0.0)) throw contract_error("pacb_ratio: zero-integral family member");
        double worst = 0.0;
        for (const PointState& x : x_samples) {
            OrbitSeq orbit = orbit_values(op, f_family[i], x, N);
            double acc = 0.0;
            for (std::size_t n = 1; n <= N; ++n) acc += orbit.value_norm(n);
            worst = std::max(worst, acc / double(N) / denom);
        }
        rep.ratios.push_back(worst);
        if (worst > rep.max_ratio) {
            rep.max_ratio = worst;
            rep.argmax_member = i;
        }
    }
    return rep;
}

std::uint64_t block_set_count(std::uint64_t x) {
    std::uint64_t count = 0;
    for (std::uint64_t lo = 4; lo <= x; lo <<= 2) {
        std::uint64_t hi = 2 * lo - 1;  // block is [lo, 2 lo)
        count += std::min(x, hi) - lo + 1;
        if (lo > (std::uint64_t(1) << 62)) break;
    }
    return count;
}

std::vector<DyadicAverageRow> dyadic_mean_ergodicity(DyadicVariant v, std::size_t m_max) {
    if (m_max == 0 || m_max > 12)
        throw contract_error("dyadic_mean_ergodicity: m_max must be in [1, 12]");
    (void)v;  // the pairing reduces to block-set membership for both variants
    std::vector<DyadicAverageRow> rows;
    Rational third(1, 3), sixth(1, 6);
    for (std::size_t m = 1; m <= m_max; ++m) {
        for (int half : {0, 1}) {
            DyadicAverageRow row;
            row.m = m;
            row.N = std::size_t(1) << (2 * m + 1 + half);
            // Iterates n = 0..N-1; the n = 0 pairing vanishes, the rest
            // contribute 1/2 exactly when n lies in the block set.
            row.count = block_set_count(row.N - 1);
            row.average = Rational(row.count, 2 * BigInt(row.N));
            row.target = half == 0 ? third : sixth;
            row.gap = row.target - row.average;
            if (row.gap < 0) row.gap = -row.gap;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace wwlab
