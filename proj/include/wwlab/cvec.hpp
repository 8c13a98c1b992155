#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "wwlab/errors.hpp"
#include "wwlab/fix128.hpp"

namespace wwlab {

// Element of E = C^d.  Dimension is fixed per experiment; mixing dimensions
// in arithmetic is a contract error.
struct CVec {
    std::vector<cplx> coords;

    CVec() = default;
    explicit CVec(std::size_t dim, cplx fill = {}) : coords(dim, fill) {}
    CVec(std::initializer_list<cplx> init) : coords(init) {}

    std::size_t dim() const { return coords.size(); }

    double norm() const {
        double s = 0.0;
        for (const cplx& z : coords) s += std::norm(z);
        return std::sqrt(s);
    }

    CVec& operator+=(const CVec& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    CVec& operator-=(const CVec& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    CVec& operator*=(cplx s) {
        for (cplx& z : coords) z *= s;
        return *this;
    }
    friend CVec operator+(CVec a, const CVec& b) { return a += b; }
    friend CVec operator-(CVec a, const CVec& b) { return a -= b; }
    friend CVec operator*(CVec a, cplx s) { return a *= s; }
    friend CVec operator*(cplx s, CVec a) { return a *= s; }

    // Dual pairing <u, v> = sum u_i conj(v_i).
    friend cplx pairing(const CVec& u, const CVec& v) {
        u.require_same_dim(v);
        cplx s = 0.0;
        for (std::size_t i = 0; i < u.coords.size(); ++i) s += u.coords[i] * std::conj(v.coords[i]);
        return s;
    }

    // Radial clip to norm at most m.
    CVec clipped(double m) const {
        double n = norm();
        if (n <= m || n == 0.0) return *this;
        CVec out = *this;
        out *= cplx(m / n, 0.0);
        return out;
    }

  private:
    void require_same_dim(const CVec& o) const {
        if (coords.size() != o.coords.size())
            throw contract_error("CVec dimension mismatch");
    }
};

inline double norm_of(std::span<const cplx> row) {
    double s = 0.0;
    for (const cplx& z : row) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace wwlab
