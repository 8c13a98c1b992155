#include "wwlab/operators.hpp"

#include <algorithm>
#include <cmath>

namespace wwlab {

namespace {

// row-major d x d product: C = A * B
void mat_mul(std::size_t d, const std::vector<cplx>& A, const std::vector<cplx>& B,
             std::vector<cplx>& C) {
    C.assign(d * d, cplx{});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            cplx a = A[i * d + k];
            if (a == cplx{}) continue;
            for (std::size_t j = 0; j < d; ++j) C[i * d + j] += a * B[k * d + j];
        }
}

CVec mat_vec(std::size_t d, const std::vector<cplx>& A, const CVec& v) {
    CVec out(d);
    for (std::size_t i = 0; i < d; ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < d; ++j) acc += A[i * d + j] * v.coords[j];
        out.coords[i] = acc;
    }
    return out;
}

double spectral_norm(std::size_t d, const std::vector<cplx>& A) {
    // power iteration on A^H A, deterministic start
    std::vector<cplx> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = cplx(1.0 / std::sqrt(double(d)), 0.0);
    double s = 0.0;
    for (int it = 0; it < 60; ++it) {
        std::vector<cplx> av(d, cplx{}), aav(d, cplx{});
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) av[i] += A[i * d + j] * v[j];
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i) aav[j] += std::conj(A[i * d + j]) * av[i];
        double nn = 0.0;
        for (std::size_t j = 0; j < d; ++j) nn += std::norm(aav[j]);
        nn = std::sqrt(nn);
        if (nn == 0.0) return 0.0;
        for (std::size_t j = 0; j < d; ++j) v[j] = aav[j] / nn;
        s = nn;
    }
    return std::sqrt(s);
}

cplx eval_table(const Observable::CoeffTable& table, Fix128 x) {
    cplx acc = 0.0;
    for (const auto& [j, c] : table) {
        if (j == 0) {
            acc += c;
            continue;
        }
        Fix128 ph = Fix128::u128(std::uint64_t(std::llabs(j))) * x;
        acc += c * unit_phase(j > 0 ? ph : -ph);
    }
    return acc;
}

Fix128 map_step(const MapSpec& map, Fix128 x) {
    if (map.kind != MapSpec::Kind::Rotation)
        throw contract_error("map_step only applies to rotations");
    return x + map.alpha;
}

// Orbit points phi^0 x, ..., phi^N x for either base map.
std::vector<Fix128> orbit_points(const MapSpec& map, const PointState& state, std::size_t N,
                                 int precision_bits = 128) {
    std::vector<Fix128> pts;
    pts.reserve(N + 1);
    if (map.kind == MapSpec::Kind::Rotation) {
        Fix128 x = state.x;
        pts.push_back(x);
        for (std::size_t n = 0; n < N; ++n) {
            x = map_step(map, x);
            pts.push_back(x);
        }
    } else {
        if (!state.bern) throw contract_error("doubling map needs a Bernoulli point-state");
        BernoulliState s = *state.bern;
        for (std::size_t n = 0; n <= N; ++n) {
            pts.push_back(s.point(precision_bits));
            s = s.shifted();
        }
    }
    return pts;
}

}  // namespace

cplx StepMultiplier::at(Fix128 x) const {
    // last break <= x
    std::size_t i = std::size_t(std::upper_bound(breaks.begin(), breaks.end(), x) -
                                breaks.begin());
    if (i == 0) throw contract_error("StepMultiplier: x below first break");
    return values[i - 1];
}

void MatrixTrigMultiplier::eval(Fix128 x, std::vector<cplx>& out) const {
    out.resize(d * d);
    for (std::size_t e = 0; e < d * d; ++e) out[e] = eval_table(entries[e], x);
}

Multiplier Multiplier::harmonic(long long freq, cplx scale) {
    Multiplier m;
    m.impl = HarmonicMultiplier{freq, scale};
    m.norm_bound = std::abs(scale);
    return m;
}

Multiplier Multiplier::step(std::vector<Fix128> breaks, std::vector<cplx> values) {
    if (breaks.empty() || breaks.size() != values.size() || !(breaks.front() == Fix128{}))
        throw contract_error("StepMultiplier: breaks must start at 0 and match values");
    if (!std::is_sorted(breaks.begin(), breaks.end()))
        throw contract_error("StepMultiplier: breaks must be sorted");
    Multiplier m;
    double bound = 0.0;
    for (cplx v : values) bound = std::max(bound, std::abs(v));
    m.impl = StepMultiplier{std::move(breaks), std::move(values)};
    m.norm_bound = bound;
    return m;
}

Multiplier Multiplier::matrix_trig(std::size_t d, std::vector<Observable::CoeffTable> entries,
                                   double bound) {
    if (d == 0 || entries.size() != d * d)
        throw contract_error("matrix multiplier needs d*d entry tables");
    Multiplier m;
    m.impl = MatrixTrigMultiplier{d, std::move(entries)};
    m.norm_bound = bound;
    return m;
}

std::size_t Multiplier::dim() const {
    if (const auto* mt = std::get_if<MatrixTrigMultiplier>(&impl)) return mt->d;
    return 1;
}

cplx Multiplier::eval_scalar(Fix128 x) const {
    if (const auto* h = std::get_if<HarmonicMultiplier>(&impl)) {
        if (h->freq == 0) return h->scale;
        Fix128 ph = Fix128::u128(std::uint64_t(std::llabs(h->freq))) * x;
        return h->scale * unit_phase(h->freq > 0 ? ph : -ph);
    }
    if (const auto* s = std::get_if<StepMultiplier>(&impl)) return s->at(x);
    throw contract_error("matrix multiplier has no scalar value");
}

void Multiplier::eval_matrix(Fix128 x, std::vector<cplx>& out) const {
    if (const auto* mt = std::get_if<MatrixTrigMultiplier>(&impl)) {
        mt->eval(x, out);
        return;
    }
    out.assign(1, eval_scalar(x));
}

double Multiplier::sampled_norm(std::size_t samples, std::uint64_t seed) const {
    std::mt19937_64 gen(seed);
    double worst = 0.0;
    std::vector<cplx> buf;
    for (std::size_t k = 0; k < samples; ++k) {
        Fix128 x = Fix128::from_double(uniform01(gen));
        if (scalar()) {
            worst = std::max(worst, std::abs(eval_scalar(x)));
        } else {
            eval_matrix(x, buf);
            worst = std::max(worst, spectral_norm(dim(), buf));
        }
    }
    return worst;
}

Multiplier noncontractive_multiplier(Fix128 alpha) {
    Fix128 half = Fix128::from_ratio(1, 2);
    if (!(Fix128{} < alpha) || !(alpha < half))
        throw contract_error("noncontractive multiplier needs alpha in (0, 1/2)");
    cplx two_i(0.0, 2.0);
    cplx inv_two_i = 1.0 / two_i;  // = -i/2
    return Multiplier::step({Fix128{}, alpha, alpha + alpha}, {two_i, inv_two_i, cplx(1.0, 0.0)});
}

const char* variant_name(const OperatorSpec& op) {
    struct V {
        const char* operator()(const Koopman&) const { return "Koopman"; }
        const char* operator()(const MultOp&) const { return "MultOp"; }
        const char* operator()(const MultKoopman&) const { return "MultKoopman"; }
        const char* operator()(const TwistedU&) const { return "TwistedU"; }
        const char* operator()(const DyadicT&) const { return "DyadicT"; }
        const char* operator()(const DyadicS&) const { return "DyadicS"; }
        const char* operator()(const NonContractiveS&) const { return "NonContractiveS"; }
    };
    return std::visit(V{}, op);
}

namespace {

OrbitSeq mult_koopman_orbit(const Multiplier& F, const MapSpec& map, const Observable& f,
                            const PointState& state, std::size_t N) {
    auto pts = orbit_points(map, state, N);
    OrbitSeq seq(f.dim(), ExactModel::FixedPoint128, "mult-koopman-orbit");
    seq.reserve(N);
    if (F.scalar()) {
        cplx cum = 1.0;
        for (std::size_t n = 1; n <= N; ++n) {
            cum *= F.eval_scalar(pts[n - 1]);
            seq.push_back(f.eval(pts[n]) * cum);
        }
        return seq;
    }
    std::size_t d = F.dim();
    if (d != f.dim()) throw contract_error("multiplier/observable dimension mismatch");
    std::vector<cplx> cum(d * d, cplx{}), step, next;
    for (std::size_t i = 0; i < d; ++i) cum[i * d + i] = 1.0;
    for (std::size_t n = 1; n <= N; ++n) {
        F.eval_matrix(pts[n - 1], step);
        mat_mul(d, cum, step, next);
        cum.swap(next);
        seq.push_back(mat_vec(d, cum, f.eval(pts[n])));
    }
    return seq;
}

OrbitSeq twisted_u_orbit(Fix128 alpha, const Observable& f, const PointState& state,
                         std::size_t N) {
    // U^n f(x) = e(n x + binom(n,2) alpha) f(x + n alpha), phases exact.
    OrbitSeq seq(f.dim(), ExactModel::FixedPoint128, "twisted-u-orbit");
    seq.reserve(N);
    Fix128 phase{};        // n x + binom(n,2) alpha
    Fix128 n_alpha{};      // n alpha
    Fix128 y = state.x;    // x + n alpha
    for (std::size_t n = 1; n <= N; ++n) {
        phase += state.x + n_alpha;  // adds x + (n-1) alpha
        n_alpha += alpha;
        y += alpha;
        seq.push_back(f.eval(y) * unit_phase(phase));
    }
    return seq;
}

}  // namespace

OrbitSeq orbit_values(const OperatorSpec& op, const Observable& f, const PointState& x,
                      std::size_t N) {
    if (N == 0) throw contract_error("orbit_values: N must be >= 1");
    if (const auto* k = std::get_if<Koopman>(&op)) {
        if (k->map.kind == MapSpec::Kind::Rotation)
            return rotation_orbit(x.x, k->map.alpha, f, N);
        if (!x.bern) throw contract_error("doubling Koopman needs a Bernoulli point-state");
        return doubling_orbit(*x.bern, f, N);
    }
    if (const auto* m = std::get_if<MultOp>(&op)) {
        // T^n f(x) = F(x)^n f(x); the base point never moves.
        OrbitSeq seq(f.dim(), ExactModel::FixedPoint128, "mult-orbit");
        seq.reserve(N);
        CVec fx = f.eval(x.x);
        if (m->F.scalar()) {
            cplx factor = m->F.eval_scalar(x.x), cum = 1.0;
            for (std::size_t n = 1; n <= N; ++n) {
                cum *= factor;
                seq.push_back(fx * cum);
            }
            return seq;
        }
        std::size_t d = m->F.dim();
        if (d != f.dim()) throw contract_error("multiplier/observable dimension mismatch");
        std::vector<cplx> step, cum(d * d, cplx{}), next;
        m->F.eval_matrix(x.x, step);
        for (std::size_t i = 0; i < d; ++i) cum[i * d + i] = 1.0;
        for (std::size_t n = 1; n <= N; ++n) {
            mat_mul(d, cum, step, next);
            cum.swap(next);
            seq.push_back(mat_vec(d, cum, fx));
        }
        return seq;
    }
    if (const auto* mk = std::get_if<MultKoopman>(&op))
        return mult_koopman_orbit(mk->F, mk->map, f, x, N);
    if (const auto* tu = std::get_if<TwistedU>(&op)) return twisted_u_orbit(tu->alpha, f, x, N);
    if (const auto* nc = std::get_if<NonContractiveS>(&op))
        return mult_koopman_orbit(noncontractive_multiplier(nc->alpha),
                                  MapSpec::rotation(nc->alpha), f, x, N);
    throw contract_error(std::string("orbit_values: variant ") + variant_name(op) +
                         " acts on mass maps, use dyadic_apply");
}

std::vector<cplx> cumulative_multipliers(const OperatorSpec& op, const PointState& x,
                                         std::size_t N) {
    std::vector<cplx> out;
    out.reserve(N);
    auto accumulate_along = [&](const Multiplier& F, const MapSpec& map) {
        if (!F.scalar()) throw contract_error("cumulative multipliers need a scalar factor");
        auto pts = orbit_points(map, x, N);
        cplx cum = 1.0;
        for (std::size_t n = 1; n <= N; ++n) {
            cum *= F.eval_scalar(pts[n - 1]);
            out.push_back(cum);
        }
    };
    if (const auto* mk = std::get_if<MultKoopman>(&op)) {
        accumulate_along(mk->F, mk->map);
    } else if (const auto* nc = std::get_if<NonContractiveS>(&op)) {
        accumulate_along(noncontractive_multiplier(nc->alpha), MapSpec::rotation(nc->alpha));
    } else if (const auto* m = std::get_if<MultOp>(&op)) {
        cplx factor = m->F.eval_scalar(x.x), cum = 1.0;
        for (std::size_t n = 1; n <= N; ++n) {
            cum *= factor;
            out.push_back(cum);
        }
    } else if (const auto* tu = std::get_if<TwistedU>(&op)) {
        Fix128 phase{}, n_alpha{};
        for (std::size_t n = 1; n <= N; ++n) {
            phase += x.x + n_alpha;
            n_alpha += tu->alpha;
            out.push_back(unit_phase(phase));
        }
    } else {
        throw contract_error("cumulative multipliers unsupported for this variant");
    }
    return out;
}

OrbitSeq pairing_twisted_orbit(const Observable& f_dual, const MapSpec& map,
                               const Observable& g, const PointState& x, std::size_t N) {
    if (N == 0) throw contract_error("pairing_twisted_orbit: N must be >= 1");
    if (N > 2048) throw resource_error("pairing_twisted_orbit: N capped at 2048 (O(N^2) recursion)");
    if (f_dual.dim() != g.dim()) throw contract_error("dual/observable dimension mismatch");
    auto pts = orbit_points(map, x, N);
    std::vector<CVec> gv(N + 1), fv(N + 1);
    for (std::size_t j = 0; j <= N; ++j) {
        gv[j] = g.eval(pts[j]);
        fv[j] = f_dual.eval(pts[j]);
    }
    // gamma_m(x_j) = gamma_{m-1}(x_{j+1})^2 <g(x_{j+m}), f(x_j)>, gamma_0 = 1.
    OrbitSeq seq(g.dim(), ExactModel::Float64, "pairing-twisted-orbit");
    seq.reserve(N);
    std::vector<cplx> prev(N + 1, cplx(1.0, 0.0)), cur(N + 1);
    for (std::size_t m = 1; m <= N; ++m) {
        for (std::size_t j = 0; j + m <= N; ++j)
            cur[j] = prev[j + 1] * prev[j + 1] * pairing(gv[j + m], fv[j]);
        seq.push_back(gv[m] * cur[0]);
        prev.swap(cur);
    }
    return seq;
}

// ---------------------------------------------------------------------------

Rational DyadicMass::total() const {
    Rational s = 0;
    for (const auto& [k, v] : mass) s += v;
    return s;
}

Rational DyadicMass::total_variation() const {
    Rational s = 0;
    for (const auto& [k, v] : mass) s += v < 0 ? Rational(-v) : v;
    return s;
}

DyadicMass dyadic_apply(DyadicVariant v, const DyadicMass& m) {
    DyadicMass out;
    for (const auto& [k, w] : m.mass) {
        if (k < 0) throw contract_error("DyadicMass indices must be nonnegative");
        BigInt target = v == DyadicVariant::S ? BigInt(k + 1) : BigInt((k + 1) * (k + 1));
        out.mass[target] += w;
    }
    return out;
}

Rational dyadic_pairing(const DyadicMass& m,
                        const std::function<bool(const BigInt&)>& g_indices) {
    Rational s = 0;
    for (const auto& [k, w] : m.mass)
        if (g_indices(k)) s += w;
    return s;
}

BigInt index_sequence(DyadicVariant v, std::size_t n, std::size_t cap) {
    if (n == 0) throw contract_error("index_sequence: n must be >= 1");
    if (v == DyadicVariant::S) return BigInt(n);
    if (n > cap) throw resource_error("index_sequence: T-variant index cap exceeded");
    BigInt a = 1;
    for (std::size_t i = 2; i <= n; ++i) a = (a + 1) * (a + 1);
    return a;
}

Rational dyadic_pointwise_value(const DyadicMass& m, const BigInt& k) {
    if (k < 0) throw contract_error("dyadic interval indices are nonnegative");
    if (k > 4096) throw resource_error("dyadic_pointwise_value: index too large for display");
    auto it = m.mass.find(k);
    if (it == m.mass.end()) return Rational(0);
    // |I_k| = 2^-(k+1), so the height is mass * 2^(k+1)
    return it->second * Rational(BigInt(1) << (k.convert_to<unsigned>() + 1));
}

bool in_dyadic_block_set(std::size_t n) {
    for (std::size_t m = 1;; ++m) {
        std::size_t lo = std::size_t(1) << (2 * m);
        if (lo > n) return false;
        if (n < 2 * lo) return true;
        if (m > 31) return false;
    }
}

std::function<bool(const BigInt&)> block_set_predicate(DyadicVariant v, std::size_t cap) {
    if (v == DyadicVariant::S)
        return [](const BigInt& k) {
            if (k <= 0 || k > std::numeric_limits<std::size_t>::max()) return false;
            return in_dyadic_block_set(std::size_t(k));
        };
    return [cap](const BigInt& k) {
        BigInt a = 1;
        for (std::size_t n = 1; a <= k; ++n) {
            if (a == k) return in_dyadic_block_set(n);
            if (n >= cap)
                throw resource_error("block_set_predicate: T-variant index cap exceeded");
            a = (a + 1) * (a + 1);
        }
        return false;
    };
}

}  // namespace wwlab
