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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "wofz/oracle.hpp"

using wofz::Complex;
using wofz::DoubleDouble;
using wofz::ExtendedComplex;
using wofz::oracle_w;
using wofz::oracle_w_extended;

namespace {

const wofz::CoefficientTable& table() {
    static const wofz::CoefficientTable t = wofz::build_table();
    return t;
}

// w(z) references computed with 80-digit arithmetic, parts as (hi, lo)
struct Ref {
    double x, y, re_hi, re_lo, im_hi, im_lo;
};

const Ref kRefs[] = {
    {0.5, 0.25, 0.6383373967914265, 6.80986288232316e-17, 0.3258148398263451, 2.6492892698236475e-17},
    {1.0, 1.0, 0.3047442052569126, -7.542861158930405e-18, 0.20821893820283163, -2.7125626527452843e-18},
    {3.0, 2.0, 0.09271076642644334, -6.009978978624135e-18, 0.12831696222826158, -4.601880206403704e-18},
    {6.0, 0.05, 0.0008187037265388671, 9.048393704582829e-21, 0.09538906995480576, -1.0719606544165567e-17},
    {6.9, 0.01, 0.0001224475875126576, 1.5329388002263374e-20, 0.08265372617573682, 7.947358851799985e-19},
    {0.0, 1.0, 0.427583576155807, 4.4107503444905154e-18, 0.0, 0.0},
    {7.05, 0.0, 2.597039249246855e-22, -2.8652243769844857e-38, 0.08085756356445661, 2.1900375718919924e-18},
    {7.2, 0.001, 1.1214508200870183e-05, -1.404066497595319e-22, 0.07913844808349572, -4.3475249058951e-19},
    {9.0, 0.5, 0.003537805942126848, 9.701366877165657e-21, 0.06288174666077395, -1.1506612585526056e-18},
    {15.0, 1.0, 0.0025130683012635035, 1.9898084208208797e-19, 0.03752811696561413, 2.5324585154496224e-19},
    {100.0, 0.01, 5.642742275050879e-07, 5.87371006976927e-23, 0.005642177916158248, -5.520683280800643e-20},
    {40000.0, 0.0001, 3.5261849004792754e-14, -1.1336681271875933e-30, 1.4104739593101639e-05, -7.888535423809938e-22},
    {0.0, 10.0, 0.05614099274382259, -4.142482612779532e-18, 0.0, 0.0},
    {2.0, 0.0, 0.01831563888873418, 2.9371802127324126e-19, 0.3400262170660662, 1.2804678971234003e-18},
    {5.0, 5.0, 0.056965439888176976, 2.9674004771734098e-18, 0.055838742775391026, 2.233152017348255e-18},
};

double dd_rel(const DoubleDouble& got, const DoubleDouble& want) {
    const DoubleDouble diff = got - want;
    const double scale = std::abs(want.to_double());
    if (scale == 0.0) return std::abs(diff.to_double());
    return std::abs(diff.to_double()) / scale;
}

// Reflection-aware oracle used by the identity check; the series branch is
// entire and handles the lower half-plane directly.
ExtendedComplex oracle_any(Complex z) {
    if (z.imag() >= 0.0) return oracle_w_extended(z);
    if (std::norm(z) <= 49.0) return wofz::detail::series_w(z);
    const ExtendedComplex upper = oracle_w_extended(-z);
    const ExtendedComplex e2 = wofz::detail::exp_minus_z2_extended(z);
    return {e2.re * 2.0 - upper.re, e2.im * 2.0 - upper.im};
}

} // namespace

TEST_CASE("oracle reproduces extended-precision references") {
    for (const Ref& r : kRefs) {
        const ExtendedComplex v = oracle_w_extended({r.x, r.y});
        const DoubleDouble dre = v.re - DoubleDouble{r.re_hi, r.re_lo};
        const DoubleDouble dim = v.im - DoubleDouble{r.im_hi, r.im_lo};
        const double diff = std::hypot(dre.to_double(), dim.to_double());
        const double scale = std::hypot(r.re_hi, r.im_hi);
        const bool series = r.x * r.x + r.y * r.y <= 49.0;
        // series: quad-double accuracy; continued fraction: truncation-limited
        CHECK(diff <= (series ? 1e-27 : 1e-18) * scale);
    }
}

TEST_CASE("oracle anchor values") {
    const Complex v0 = oracle_w({0.0, 0.0});
    CHECK(v0.real() == 1.0);
    CHECK(v0.imag() == 0.0);

    const Complex vi = oracle_w({0.0, 1.0});
    CHECK(std::abs(vi.real() - 0.4275835761558070044108) <= 1e-15 * vi.real());
    CHECK(vi.imag() == 0.0);
}

TEST_CASE("oracle branch agreement at |z| = 7") {
    // both branches evaluated at the same points just inside/outside
    double worst = 0.0;
    for (int i = 0; i <= 90; i += 2) {
        const double th = std::numbers::pi / 2.0 * i / 90.0;
        for (double scale : {1.0 - 1e-9, 1.0 + 1e-9}) {
            const Complex z{7.0 * scale * std::cos(th), 7.0 * scale * std::sin(th)};
            const Complex a = wofz::detail::series_w(z).to_complex();
            const Complex b = wofz::detail::contfr_w(z).to_complex();
            worst = std::max(worst, std::abs(a - b) / std::abs(a));
        }
    }
    CHECK(worst <= 1e-15);
}

TEST_CASE("oracle satisfies the reflection identity") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    int tested = 0;
    double worst = 0.0;
    while (tested < 2000) {
        const Complex z{u(rng), u(rng)};
        if (std::norm(z) > 100.0) continue;
        ++tested;
        const ExtendedComplex a = oracle_any(z);
        const ExtendedComplex b = oracle_any(-z);
        const ExtendedComplex e2 = wofz::detail::exp_minus_z2_extended(z);
        const DoubleDouble rre = a.re + b.re - e2.re * 2.0;
        const DoubleDouble rim = a.im + b.im - e2.im * 2.0;
        const double resid = std::hypot(rre.to_double(), rim.to_double());
        const double scale = std::max({std::hypot(a.re.hi, a.im.hi),
                                       2.0 * std::hypot(e2.re.hi, e2.im.hi)});
        worst = std::max(worst, resid / scale);
    }
    CHECK(worst <= 1e-15);
}

TEST_CASE("oracle real part equals exp(-x^2) on the real axis") {
    for (double x = 0.0; x <= 6.0; x += 0.05) {
        const ExtendedComplex v = oracle_w_extended({x, 0.0});
        const ExtendedComplex e2 = wofz::detail::exp_minus_z2_extended({x, 0.0});
        CHECK(dd_rel(v.re, e2.re) <= 1e-15);
    }
}

TEST_CASE("oracle rejects arguments outside its window") {
    CHECK_THROWS_AS(oracle_w({0.0, -0.1}), std::domain_error);
    CHECK_THROWS_AS(oracle_w({2e5, 0.0}), std::domain_error);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(oracle_w({nan, 1.0}), std::domain_error);
}

TEST_CASE("relative errors against the evaluator") {
    const auto r11 = wofz::relative_errors({1.0, 1.0}, table());
    CHECK_FALSE(r11.re_absolute);
    CHECK_FALSE(r11.im_absolute);
    CHECK(r11.re <= 1e-13);
    CHECK(r11.im <= 1e-13);

    // on the imaginary axis the reference imaginary part is exactly zero
    const auto raxis = wofz::relative_errors({0.0, 1.0}, table());
    CHECK(raxis.im_absolute);
    CHECK(raxis.im <= 1e-15);
    CHECK_FALSE(raxis.re_absolute);

    const auto rhard = wofz::relative_errors({6.0, 0.05}, table());
    CHECK(rhard.re <= 1e-13);
    CHECK(rhard.im <= 1e-13);
}
