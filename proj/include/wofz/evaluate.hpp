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

#ifndef WOFZ_EVALUATE_HPP
#define WOFZ_EVALUATE_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wofz/table.hpp"

// Three-regime evaluation of w(z) over the whole complex plane:
//   - outside the circle |z| = 8: an 11-level continued fraction,
//   - inside, above the line y = 0.05|x|: the shifted rational sum,
//   - inside, below the line: the pole-free rational form,
// with the reflection w(z) = 2 exp(-z^2) - w(-z) for Im z < 0.

namespace wofz {

using Complex = std::complex<double>;

enum class Regime {
    External,           // |z| > 8
    PrimarySubdomain,   // |z| <= 8, y > 0.05|x|
    SecondarySubdomain, // |z| <= 8, y <= 0.05|x|
};

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::External: return "external";
        case Regime::PrimarySubdomain: return "primary";
        case Regime::SecondarySubdomain: return "secondary";
    }
    return "?";
}

struct EvalResult {
    Complex value;
    Regime regime;       // regime of the point actually evaluated (of conj(z) when reflected)
    bool reflected = false;
};

/// Regime selection for y >= 0.  Both inequalities strict; ties go inward.
inline Regime dispatch(Complex z) {
    const double x = z.real(), y = z.imag();
    if (x * x + y * y > 64.0) return Regime::External;
    if (y > 0.05 * std::abs(x)) return Regime::PrimarySubdomain;
    return Regime::SecondarySubdomain;
}

/// M-term rational sum.  The caller passes the already-shifted argument
/// z + i*varsigma/2.
inline Complex eval_omega(Complex z_shifted, const CoefficientTable& t) {
    const Complex z2 = z_shifted * z_shifted;
    Complex sum{0.0, 0.0};
    const int terms = t.omega_terms();
    for (int m = 0; m < terms; ++m)
        sum += (t.a[m] + t.b[m] * z_shifted) / (t.c[m] * t.c[m] - z2);
    return sum;
}

/// Pole-free form exp(-z^2) + z * sum, M+2 terms by default.
inline Complex eval_subdom2(Complex z, const CoefficientTable& t) {
    const Complex z2 = z * z;
    const Complex z4 = z2 * z2;
    Complex sum{0.0, 0.0};
    const int terms = t.subdom2_terms();
    for (int m = 0; m < terms; ++m)
        sum += (t.alpha[m] - t.beta[m] * z2) / (t.gamma[m] - t.theta[m] * z2 + z4);
    return std::exp(-z2) + z * sum;
}

/// 11-level Laplace continued fraction, evaluated bottom-up with partial
/// numerators 11/2, 5, 9/2, ..., 1/2 and the final i/sqrt(pi)/(z - .).
inline Complex eval_contfr(Complex z) {
    Complex cf = 5.5 / z;
    for (int k = 10; k >= 1; --k)
        cf = (k * 0.5) / (z - cf);
    const double inv_sqrt_pi = 0.5641895835477562869; // 1/sqrt(pi)
    return Complex{0.0, inv_sqrt_pi} / (z - cf);
}

namespace detail {

inline Complex eval_upper(Complex z, Regime r, const CoefficientTable& t) {
    switch (r) {
        case Regime::External: return eval_contfr(z);
        case Regime::PrimarySubdomain:
            return eval_omega(z + Complex{0.0, t.params.varsigma / 2.0}, t);
        case Regime::SecondarySubdomain: return eval_subdom2(z, t);
    }
    return {};
}

} // namespace detail

/// w(z) anywhere in the complex plane.  Non-finite input throws
/// std::domain_error.  For Im z < 0 the reflection formula applies; the
/// exponential may overflow to infinity for huge |Im z|, which is passed
/// through per floating-point semantics rather than trapped.
inline EvalResult eval_w(Complex z, const CoefficientTable& t) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("eval_w: non-finite argument");

    const bool reflected = z.imag() < 0.0;
    const Complex zeta = reflected ? std::conj(z) : z;
    const Regime r = dispatch(zeta);
    Complex f = detail::eval_upper(zeta, r, t);
    if (reflected)
        f = std::conj(2.0 * std::exp(-zeta * zeta) - f);
    return {f, r, reflected};
}

/// Pointwise map of eval_w; output order matches input order and each value
/// is bit-identical to the scalar call.  threads > 1 partitions the input
/// into contiguous chunks.
inline std::vector<EvalResult> eval_batch(const std::vector<Complex>& points,
                                          const CoefficientTable& t,
                                          unsigned threads = 1) {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!std::isfinite(points[i].real()) || !std::isfinite(points[i].imag()))
            throw std::domain_error("eval_batch: non-finite point at index " +
                                    std::to_string(i));

    std::vector<EvalResult> out(points.size());
    if (threads <= 1 || points.size() < 2 * threads) {
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = eval_w(points[i], t);
        return out;
    }

    std::vector<std::thread> pool;
    const std::size_t n = points.size();
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned k = 0; k < threads; ++k) {
        const std::size_t lo = k * chunk;
        if (lo >= n) break;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) out[i] = eval_w(points[i], t);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

} // namespace wofz

#endif // WOFZ_EVALUATE_HPP
