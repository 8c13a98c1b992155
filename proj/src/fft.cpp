#include "wwlab/fft.hpp"

#include <cstdint>
#include <numbers>

#include "wwlab/errors.hpp"

namespace wwlab {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// e(r / m) with exact integer range reduction.
cplx root(std::uint64_t r, std::uint64_t m) {
    double t = 2.0 * std::numbers::pi * (double(r % m) / double(m));
    return {std::cos(t), std::sin(t)};
}

}  // namespace

void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw contract_error("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / double(len);
        cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w = 1.0;
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::vector<cplx> circle_eval(const std::vector<cplx>& x, std::size_t M) {
    if (M == 0) throw contract_error("circle_eval: M must be >= 1");
    const std::size_t L = x.size();
    if (L <= 64 || M < 32) {  // small cases: direct evaluation
        std::vector<cplx> X(M);
        for (std::size_t j = 0; j < M; ++j) {
            cplx w = root(j, M), pw = 1.0, acc = 0.0;
            for (std::size_t n = 0; n < L; ++n) {
                acc += x[n] * pw;
                pw *= w;
            }
            X[j] = acc;
        }
        return X;
    }
    if (is_pow2(M) && L <= M) {
        std::vector<cplx> a(M, cplx{});
        std::copy(x.begin(), x.end(), a.begin());
        fft_pow2(a, +1);  // e(+nj/M) convention
        return a;
    }
    // Bluestein: nj = (n^2 + j^2 - (j-n)^2)/2, chirps reduced mod 2M exactly.
    const std::size_t P = next_pow2(L + M - 1);
    auto chirp = [&](std::uint64_t k) {  // e(+ k^2 / (2M)), k < max(L,M)
        std::uint64_t r = (k % (2 * M)) * (k % (2 * M)) % (2 * M);
        return root(r, 2 * M);
    };
    std::vector<cplx> a(P, cplx{}), b(P, cplx{});
    for (std::size_t n = 0; n < L; ++n) a[n] = x[n] * chirp(n);
    for (std::size_t k = 0; k < M; ++k) b[k] = std::conj(chirp(k));
    for (std::size_t k = 1; k < L; ++k) b[P - k] = std::conj(chirp(k));
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < P; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    std::vector<cplx> X(M);
    for (std::size_t j = 0; j < M; ++j) X[j] = a[j] * chirp(j) / double(P);
    return X;
}

}  // namespace wwlab
