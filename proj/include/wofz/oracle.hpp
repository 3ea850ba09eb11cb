/* Copyright 2026 The libwofz Authors.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef WOFZ_ORACLE_HPP
#define WOFZ_ORACLE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "wofz/evaluate.hpp"
#include "wofz/extended.hpp"
#include "wofz/table.hpp"

// Independent high-accuracy reference for w(z), kept deliberately disjoint
// from the fast evaluator's formulas and branch radii:
//   |z| <= 7 : the power series  w(z) = sum (iz)^n / Gamma(n/2 + 1),
//              accumulated in quad-double (the alternating terms peak near
//              exp(|z|^2), which costs ~21 digits of cancellation at |z| = 7,
//              more than double-double can absorb),
//   |z| >  7 : a 64-level Laplace continued fraction in double-double.
// Series truncation: term < 1e-35 * |sum|, hard cap 400 terms.

namespace wofz {

namespace detail {

inline constexpr int kSeriesCap = 400;

// inv_gamma_table()[n] = 1/Gamma(n/2 + 1) in quad precision.
inline const std::array<Quad, kSeriesCap + 1>& inv_gamma_table() {
    static const std::array<Quad, kSeriesCap + 1> table = [] {
        std::array<Quad, kSeriesCap + 1> g{};
        std::array<Quad, kSeriesCap + 1> gam{};
        gam[0] = Quad(1.0);                       // Gamma(1)
        gam[1] = quad_mul(kSqrtPi, 0.5);          // Gamma(3/2)
        for (int n = 2; n <= kSeriesCap; ++n)
            gam[n] = quad_mul(gam[n - 2], 0.5 * n); // Gamma(x+1) = x Gamma(x)
        for (int n = 0; n <= kSeriesCap; ++n) g[n] = quad_recip(gam[n]);
        return g;
    }();
    return table;
}

inline ExtendedComplex series_w(std::complex<double> z) {
    const auto& ig = inv_gamma_table();
    const std::complex<double> iz{-z.imag(), z.real()};
    QuadComplex sum{Quad(1.0), Quad(0.0)};   // n = 0 term
    QuadComplex power{Quad(1.0), Quad(0.0)}; // (iz)^n
    for (int n = 1; n <= kSeriesCap; ++n) {
        power = qc_mul(power, iz);
        const QuadComplex term = qc_scale(power, ig[n]);
        sum = qc_add(sum, term);
        const double tmag = std::abs(term.re.d[0]) + std::abs(term.im.d[0]);
        const double smag = std::abs(sum.re.d[0]) + std::abs(sum.im.d[0]);
        if (n > 8 && tmag < 1e-35 * smag) break;
    }
    return {quad_to_dd(sum.re), quad_to_dd(sum.im)};
}

inline ExtendedComplex contfr_w(std::complex<double> z, int levels = 64) {
    const ExtendedComplex zz{DoubleDouble(z.real()), DoubleDouble(z.imag())};
    ExtendedComplex cf = div_real(levels * 0.5, zz);
    for (int k = levels - 1; k >= 1; --k)
        cf = div_real(k * 0.5, zz - cf);
    return div_imag(kInvSqrtPi, zz - cf);
}

// exp(-z^2) in extended precision via the even part of the series (the
// Taylor series of exp with argument -z^2).  Accurate for |z| <= ~10; used
// by the oracle's own identity checks, not by the fast paths.
inline ExtendedComplex exp_minus_z2_extended(std::complex<double> z) {
    const auto& ig = inv_gamma_table(); // ig[2k] = 1/k!
    const std::complex<double> w = -(z * z);
    QuadComplex sum{Quad(1.0), Quad(0.0)};
    QuadComplex power{Quad(1.0), Quad(0.0)};
    for (int k = 1; 2 * k <= kSeriesCap; ++k) {
        power = qc_mul(power, w);
        const QuadComplex term = qc_scale(power, ig[2 * k]);
        sum = qc_add(sum, term);
        const double tmag = std::abs(term.re.d[0]) + std::abs(term.im.d[0]);
        const double smag = std::abs(sum.re.d[0]) + std::abs(sum.im.d[0]);
        if (k > 4 && tmag < 1e-35 * smag) break;
    }
    return {quad_to_dd(sum.re), quad_to_dd(sum.im)};
}

} // namespace detail

/// Extended-precision w(z) for y >= 0, |z| <= 1e5.
inline ExtendedComplex oracle_w_extended(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("oracle_w: non-finite argument");
    if (z.imag() < 0.0)
        throw std::domain_error("oracle_w: defined for Im z >= 0 only");
    const double r2 = z.real() * z.real() + z.imag() * z.imag();
    if (r2 > 1e10)
        throw std::domain_error("oracle_w: |z| exceeds the validity window 1e5");
    return r2 <= 49.0 ? detail::series_w(z) : detail::contfr_w(z);
}

/// w(z) correctly rounded from the extended computation.
inline Complex oracle_w(Complex z) { return oracle_w_extended(z).to_complex(); }

/// Per-part relative deviations of the fast evaluator from the oracle.
/// When a reference part is (numerically) zero, |part| < 1e-300, the
/// deviation is reported as an absolute error and flagged.
struct RelativeErrors {
    double re = 0.0;
    double im = 0.0;
    bool re_absolute = false;
    bool im_absolute = false;
};

inline RelativeErrors relative_errors(Complex z, const CoefficientTable& t) {
    const ExtendedComplex ref = oracle_w_extended(z);
    const Complex got = eval_w(z, t).value;
    RelativeErrors out;

    const DoubleDouble dre = ref.re - DoubleDouble(got.real());
    if (std::abs(ref.re.hi) < 1e-300) {
        out.re_absolute = true;
        out.re = std::abs(dre.to_double());
    } else {
        out.re = std::abs((dre / ref.re).to_double());
    }
    const DoubleDouble dim = ref.im - DoubleDouble(got.imag());
    if (std::abs(ref.im.hi) < 1e-300) {
        out.im_absolute = true;
        out.im = std::abs(dim.to_double());
    } else {
        out.im = std::abs((dim / ref.im).to_double());
    }
    return out;
}

} // namespace wofz

#endif // WOFZ_ORACLE_HPP
