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

#ifndef WOFZ_TABLE_HPP
#define WOFZ_TABLE_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wofz {

/// Parameters of the sampling-based rational approximation.
///
/// h is the sampling step, varsigma the imaginary shift, M the number of
/// rational terms, N the sampling half-width.  The defaults reproduce the
/// published configuration.  extra_terms controls whether the pole-free
/// evaluator uses M+2 terms (default) or just M.
struct Params {
    double h = 0.25;
    double varsigma = 2.75;
    int M = 23;
    int N = 23;
    bool extra_terms = true;

    bool operator==(const Params&) const = default;
};

inline void validate(const Params& p) {
    if (!(p.h > 0.0) || !std::isfinite(p.h))
        throw std::invalid_argument("Params: h must be positive and finite");
    if (!(p.varsigma > 0.0) || !std::isfinite(p.varsigma))
        throw std::invalid_argument("Params: varsigma must be positive and finite");
    if (p.M < 1) throw std::invalid_argument("Params: M must be >= 1");
    if (p.N < 1) throw std::invalid_argument("Params: N must be >= 1");
}

/// Expansion coefficients for the two rational forms.
///
/// All arrays hold M+2 entries (index m-1 stores coefficient m).  The plain
/// rational sum uses the first M, the pole-free form uses all M+2 unless
/// extra_terms is off.  a and c are real; b is purely imaginary and alpha
/// accordingly has an exactly zero real part.  beta equals b.
struct CoefficientTable {
    Params params;
    std::vector<double> a;
    std::vector<std::complex<double>> b;
    std::vector<double> c;
    std::vector<std::complex<double>> alpha;
    std::vector<std::complex<double>> beta;
    std::vector<double> gamma;
    std::vector<double> theta;

    int size() const { return static_cast<int>(a.size()); }
    int omega_terms() const { return params.M; }
    int subdom2_terms() const { return params.extra_terms ? params.M + 2 : params.M; }
};

/// Build the coefficient table.  Pure; same params give a bit-identical table.
inline CoefficientTable build_table(const Params& p = {}) {
    validate(p);
    const double pi = std::numbers::pi;
    const double sqrt_pi = std::sqrt(pi);
    const double h = p.h, sig = p.varsigma;
    const int M = p.M, N = p.N;
    const double half_sig = sig / 2.0;

    CoefficientTable t;
    t.params = p;
    const int count = M + 2;
    t.a.resize(count);
    t.b.resize(count);
    t.c.resize(count);
    t.alpha.resize(count);
    t.beta.resize(count);
    t.gamma.resize(count);
    t.theta.resize(count);

    for (int m = 1; m <= count; ++m) {
        // n-sums accumulated left to right in plain double precision
        double sum_sin = 0.0, sum_cos = 0.0;
        for (int n = -N; n <= N; ++n) {
            const double weight = std::exp(sig * sig / 4.0 - double(n) * n * h * h);
            const double arg = pi * (m - 0.5) * (n * h + half_sig) / (M * h);
            sum_sin += weight * std::sin(arg);
            sum_cos += weight * std::cos(arg);
        }
        const double am = sqrt_pi * (m - 0.5) / (2.0 * M * M * h) * sum_sin;
        const double bm_im = -sum_cos / (M * sqrt_pi); // b_m = -i * sum / (M sqrt(pi))
        const double cm = pi * (m - 0.5) / (2.0 * M * h);

        t.a[m - 1] = am;
        t.b[m - 1] = {0.0, bm_im};
        t.c[m - 1] = cm;
        // alpha = b*(c^2 - (sig/2)^2) + i*a*sig: real part stays exactly zero
        t.alpha[m - 1] = {0.0, bm_im * (cm * cm - half_sig * half_sig) + am * sig};
        t.beta[m - 1] = t.b[m - 1];
        const double u = cm * cm + half_sig * half_sig;
        t.gamma[m - 1] = u * u;
        t.theta[m - 1] = 2.0 * cm * cm - sig * sig / 2.0;
    }
    return t;
}

/// Check every table invariant; returns human-readable violations (empty on
/// success).  Relative tolerance 1e-12 for the algebraic identities, exact
/// zero for the structurally-zero parts.
inline std::vector<std::string> verify_table(const CoefficientTable& t) {
    std::vector<std::string> bad;
    auto complain = [&bad](int m, const std::string& what) {
        std::ostringstream os;
        os << "m=" << m + 1 << ": " << what;
        bad.push_back(os.str());
    };

    const Params& p = t.params;
    const int count = p.M + 2;
    if (t.size() != count) {
        bad.push_back("table does not hold M+2 entries");
        return bad;
    }
    const double sig = p.varsigma;
    const double spacing = std::numbers::pi / (2.0 * p.M * p.h);

    for (int m = 0; m < count; ++m) {
        if (t.b[m].real() != 0.0) complain(m, "b has a nonzero real part");
        if (t.alpha[m].real() != 0.0) complain(m, "alpha has a nonzero real part");
        if (t.beta[m] != t.b[m]) complain(m, "beta differs from b");
        if (!(t.c[m] > 0.0)) complain(m, "c is not positive");
        if (m > 0) {
            if (!(t.c[m] > t.c[m - 1])) complain(m, "c is not strictly increasing");
            const double dc = t.c[m] - t.c[m - 1];
            if (std::abs(dc - spacing) > 1e-12 * spacing)
                complain(m, "c spacing differs from pi/(2Mh)");
        }
        if (!(t.gamma[m] > 0.0)) complain(m, "gamma is not positive");
        // theta^2 - 4 gamma = -4 c^2 sig^2
        const double lhs = t.theta[m] * t.theta[m] - 4.0 * t.gamma[m];
        const double rhs = -4.0 * t.c[m] * t.c[m] * sig * sig;
        if (std::abs(lhs - rhs) > 1e-12 * std::abs(rhs))
            complain(m, "discriminant identity theta^2 - 4 gamma = -4 c^2 sig^2 violated");
    }
    return bad;
}

} // namespace wofz

#endif // WOFZ_TABLE_HPP
