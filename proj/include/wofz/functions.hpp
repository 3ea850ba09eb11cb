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

#ifndef WOFZ_FUNCTIONS_HPP
#define WOFZ_FUNCTIONS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "wofz/evaluate.hpp"

// The w-derived special-function family.  Every member is a thin wrapper
// over eval_w; no independent approximations.  exp(-z^2) factors can
// overflow for large |Im z| and are passed through, not trapped.

namespace wofz {

/// erf(z) = 1 - exp(-z^2) w(iz)
inline Complex erf_c(Complex z, const CoefficientTable& t) {
    const Complex iz{-z.imag(), z.real()};
    return 1.0 - std::exp(-z * z) * eval_w(iz, t).value;
}

/// daw(z) = (sqrt(pi)/2i) (w(z) - exp(-z^2))
inline Complex dawson(Complex z, const CoefficientTable& t) {
    const double half_sqrt_pi = 0.8862269254527580137;
    const Complex d = eval_w(z, t).value - std::exp(-z * z);
    return Complex{0.0, -half_sqrt_pi} * d;
}

/// F(z) = (1+i) [1 - exp(i pi z^2 / 2) w(sqrt(pi)(1+i)z/2)] / 2
inline Complex fresnel(Complex z, const CoefficientTable& t) {
    const double sqrt_pi = 1.7724538509055160273;
    const Complex arg = sqrt_pi * Complex{1.0, 1.0} * z / 2.0;
    const Complex phase = std::exp(Complex{0.0, std::numbers::pi / 2.0} * z * z);
    return Complex{1.0, 1.0} * (1.0 - phase * eval_w(arg, t).value) / 2.0;
}

/// Z(z) = i sqrt(pi) w(z); continues across the real axis via eval_w's
/// reflection for Im z < 0.
inline Complex plasma_dispersion(Complex z, const CoefficientTable& t) {
    const double sqrt_pi = 1.7724538509055160273;
    return Complex{0.0, sqrt_pi} * eval_w(z, t).value;
}

/// Voigt function K(x, y) = Re w(x + iy), y >= 0.
inline double voigt(double x, double y, const CoefficientTable& t) {
    if (!(y >= 0.0))
        throw std::domain_error("voigt: damping parameter y must be >= 0");
    return eval_w(Complex{x, y}, t).value.real();
}

} // namespace wofz

#endif // WOFZ_FUNCTIONS_HPP
