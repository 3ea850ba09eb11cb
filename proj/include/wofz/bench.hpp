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

#ifndef WOFZ_BENCH_HPP
#define WOFZ_BENCH_HPP

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "wofz/evaluate.hpp"

// Throughput measurements over the run-time test domains, with a seedable,
// platform-independent point generator.

namespace wofz {

/// SplitMix64: state advances by the golden-gamma constant, output is the
/// finalizer of Stafford's mix13.  Chosen because the whole algorithm fits
/// in a screenful and produces identical streams on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in the open interval (0, 1).
    double open01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1p-53;
    }

  private:
    std::uint64_t state_;
};

enum class DomainKind {
    SmallY,  // 0 < x < 6, 0 < y < 0.1
    Disk15,  // |z| < 15, y >= 0
    Disk10k, // |z| < 10000, y >= 0
    Mixed,   // 9:1 split between |z| < 15 and the annulus 15 <= |z| < 10000
};

inline const char* domain_name(DomainKind k) {
    switch (k) {
        case DomainKind::SmallY: return "smally";
        case DomainKind::Disk15: return "disk15";
        case DomainKind::Disk10k: return "disk10k";
        case DomainKind::Mixed: return "mixed";
    }
    return "?";
}

struct BenchDomain {
    DomainKind kind = DomainKind::SmallY;
    std::size_t n = 0;
    std::uint64_t seed = 1;
};

struct BenchReport {
    BenchDomain domain;
    double wall_seconds = 0.0;
    double points_per_second = 0.0;
    Complex checksum{0.0, 0.0};
    std::array<std::size_t, 3> regime_counts{}; // external, primary, secondary
};

namespace detail {

inline Complex half_disk_point(SplitMix64& rng, double r_lo, double r_hi) {
    // area-uniform over the half annulus r_lo <= |z| < r_hi, 0 <= arg z <= pi
    const double u = rng.open01();
    const double r = std::sqrt(r_lo * r_lo + u * (r_hi * r_hi - r_lo * r_lo));
    const double th = std::numbers::pi * rng.open01();
    return {r * std::cos(th), r * std::sin(th)};
}

} // namespace detail

/// Deterministic for a given seed; identical sequences on every platform.
inline std::vector<Complex> gen_points(const BenchDomain& d) {
    if (d.n < 1) throw std::invalid_argument("gen_points: n must be >= 1");
    SplitMix64 rng(d.seed);
    std::vector<Complex> pts;
    pts.reserve(d.n);
    for (std::size_t i = 0; i < d.n; ++i) {
        switch (d.kind) {
            case DomainKind::SmallY:
                pts.push_back({6.0 * rng.open01(), 0.1 * rng.open01()});
                break;
            case DomainKind::Disk15:
                pts.push_back(detail::half_disk_point(rng, 0.0, 15.0));
                break;
            case DomainKind::Disk10k:
                pts.push_back(detail::half_disk_point(rng, 0.0, 10000.0));
                break;
            case DomainKind::Mixed:
                // every 10th point lands in the outer annulus: exact 9:1 split
                if (i % 10 == 9)
                    pts.push_back(detail::half_disk_point(rng, 15.0, 10000.0));
                else
                    pts.push_back(detail::half_disk_point(rng, 0.0, 15.0));
                break;
        }
    }
    return pts;
}

inline std::array<std::size_t, 3> regime_histogram(const std::vector<Complex>& pts) {
    std::array<std::size_t, 3> counts{0, 0, 0};
    for (Complex z : pts) {
        const Complex zeta = z.imag() < 0.0 ? std::conj(z) : z;
        switch (dispatch(zeta)) {
            case Regime::External: ++counts[0]; break;
            case Regime::PrimarySubdomain: ++counts[1]; break;
            case Regime::SecondarySubdomain: ++counts[2]; break;
        }
    }
    return counts;
}

/// Time eval_batch over the generated points.  The checksum is the complex
/// sum of all outputs in input order, so it is bitwise reproducible across
/// runs and thread counts.
inline BenchReport run_bench(const BenchDomain& d, const CoefficientTable& t,
                             unsigned threads = 1) {
    BenchReport rep;
    rep.domain = d;
    const std::vector<Complex> pts = gen_points(d);
    rep.regime_counts = regime_histogram(pts);

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<EvalResult> out = eval_batch(pts, t, threads);
    const auto t1 = std::chrono::steady_clock::now();

    Complex sum{0.0, 0.0};
    for (const EvalResult& r : out) sum += r.value;
    rep.checksum = sum;
    rep.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    if (rep.wall_seconds <= 0.0) rep.wall_seconds = 1e-9;
    rep.points_per_second = static_cast<double>(d.n) / rep.wall_seconds;
    return rep;
}

} // namespace wofz

#endif // WOFZ_BENCH_HPP
