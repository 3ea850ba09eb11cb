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

#ifndef WOFZ_ANALYSIS_HPP
#define WOFZ_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "wofz/oracle.hpp"
#include "wofz/table.hpp"

// Pole bookkeeping for both rational forms and relative-error maps against
// the extended-precision oracle.

namespace wofz {

/// The four roots of gamma_m - theta_m z^2 + z^4 = 0 for one m.  In closed
/// form: z1 = c + i s/2, z2 = -z1, z3 = c - i s/2, z4 = -z3 (s = varsigma).
struct QuarticRoots {
    Complex z1, z2, z3, z4;
};

struct PoleSet {
    std::vector<QuarticRoots> quartic;    // M+2 entries, one per coefficient index
    std::vector<Complex> omega_poles;     // 2M roots +/-c_m - i s/2
};

namespace detail {

// Distance from a point to the secondary subdomain
// { |z| <= 8, 0 <= y <= 0.05|x| }, computed by dense column sampling.
inline double distance_to_secondary(Complex p) {
    double best = 1e300;
    const int cols = 32000;
    for (int i = 0; i <= cols; ++i) {
        const double x = -8.0 + 16.0 * i / cols;
        const double top = std::min(0.05 * std::abs(x),
                                    std::sqrt(std::max(0.0, 64.0 - x * x)));
        const double dy = p.imag() < 0.0 ? -p.imag()
                        : (p.imag() > top ? p.imag() - top : 0.0);
        const double dx = p.real() - x;
        best = std::min(best, std::hypot(dx, dy));
    }
    return best;
}

} // namespace detail

/// Closed-form pole ledger.  Verifies the root residuals and that no pole of
/// either form sits in (or near) a region the dispatcher routes to it.
inline PoleSet locate_poles(const CoefficientTable& t) {
    const double half_sig = t.params.varsigma / 2.0;
    PoleSet ps;
    ps.quartic.reserve(t.size());
    for (int m = 0; m < t.size(); ++m) {
        const double c = t.c[m];
        QuarticRoots r;
        r.z1 = {c, half_sig};
        r.z2 = {-c, -half_sig};
        r.z3 = {c, -half_sig};
        r.z4 = {-c, half_sig};
        for (Complex root : {r.z1, r.z2, r.z3, r.z4}) {
            const Complex z2 = root * root;
            const Complex res = t.gamma[m] - t.theta[m] * z2 + z2 * z2;
            if (std::abs(res) > 1e-9)
                throw std::logic_error("locate_poles: quartic residual above 1e-9");
            if (detail::distance_to_secondary(root) <= 0.9)
                throw std::logic_error("locate_poles: quartic root too close to the secondary subdomain");
        }
        ps.quartic.push_back(r);
    }
    for (int m = 0; m < t.omega_terms(); ++m) {
        ps.omega_poles.push_back({t.c[m], -half_sig});
        ps.omega_poles.push_back({-t.c[m], -half_sig});
    }
    for (Complex p : ps.omega_poles)
        if (!(p.imag() < 0.0))
            throw std::logic_error("locate_poles: rational-form pole not below the real axis");
    return ps;
}

enum class Part { Re, Im };

/// Rectangular map of log10 per-part relative errors (absolute where the
/// reference part is numerically zero; those cells are flagged).
struct ErrorGrid {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    int nx = 0, ny = 0;
    Part part = Part::Re;
    std::vector<double> log10_delta; // row-major, y-major rows
    std::vector<unsigned char> abs_flag;

    double worst = 0.0;               // worst relative-mode delta
    double worst_x = 0.0, worst_y = 0.0;
    double worst_absolute = 0.0;      // worst among flagged cells

    double x_at(int i) const { return nx == 1 ? xmin : xmin + (xmax - xmin) * i / (nx - 1); }
    double y_at(int j) const { return ny == 1 ? ymin : ymin + (ymax - ymin) * j / (ny - 1); }
};

/// Sample cell corners (linspace inclusive of endpoints) over
/// [xmin,xmax] x [ymin,ymax]; rows are computed concurrently.
inline ErrorGrid error_map(double xmin, double xmax, double ymin, double ymax,
                           int nx, int ny, Part part, const CoefficientTable& t,
                           unsigned threads = std::thread::hardware_concurrency()) {
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("error_map: nx and ny must be >= 2");
    if (static_cast<long long>(nx) * ny > 10'000'000LL)
        throw std::runtime_error("error_map: grid exceeds 1e7 cells");

    ErrorGrid g;
    g.xmin = xmin; g.xmax = xmax; g.ymin = ymin; g.ymax = ymax;
    g.nx = nx; g.ny = ny; g.part = part;
    g.log10_delta.assign(static_cast<std::size_t>(nx) * ny, 0.0);
    g.abs_flag.assign(static_cast<std::size_t>(nx) * ny, 0);

    auto run_rows = [&](int j0, int j1) {
        for (int j = j0; j < j1; ++j) {
            const double y = g.y_at(j);
            for (int i = 0; i < nx; ++i) {
                const double x = g.x_at(i);
                const RelativeErrors re = relative_errors({x, y}, t);
                const bool absolute = part == Part::Re ? re.re_absolute : re.im_absolute;
                const double delta = part == Part::Re ? re.re : re.im;
                const std::size_t idx = static_cast<std::size_t>(j) * nx + i;
                g.log10_delta[idx] = std::log10(std::max(delta, 1e-300));
                g.abs_flag[idx] = absolute ? 1 : 0;
            }
        }
    };

    if (threads <= 1 || ny < 4) {
        run_rows(0, ny);
    } else {
        const unsigned nthreads = std::min<unsigned>(threads, ny);
        std::vector<std::thread> pool;
        const int chunk = (ny + nthreads - 1) / nthreads;
        for (unsigned k = 0; k < nthreads; ++k) {
            const int j0 = k * chunk;
            if (j0 >= ny) break;
            pool.emplace_back(run_rows, j0, std::min(ny, j0 + chunk));
        }
        for (auto& th : pool) th.join();
    }

    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j) * nx + i;
            const double delta = std::pow(10.0, g.log10_delta[idx]);
            if (g.abs_flag[idx]) {
                if (delta > g.worst_absolute) g.worst_absolute = delta;
            } else if (delta > g.worst) {
                g.worst = delta;
                g.worst_x = g.x_at(i);
                g.worst_y = g.y_at(j);
            }
        }
    return g;
}

/// CSV with header x,y,log10_delta,abs_flag; one row per grid cell.
inline void write_csv(const ErrorGrid& g, std::ostream& os) {
    os << "x,y,log10_delta,abs_flag\n";
    char line[128];
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j) * g.nx + i;
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%d\n",
                          g.x_at(i), g.y_at(j), g.log10_delta[idx],
                          int(g.abs_flag[idx]));
            os << line;
        }
}

} // namespace wofz

#endif // WOFZ_ANALYSIS_HPP
