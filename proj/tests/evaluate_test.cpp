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
#include <random>

#include "wofz/evaluate.hpp"
#include "wofz/table.hpp"

using wofz::Complex;
using wofz::dispatch;
using wofz::eval_batch;
using wofz::eval_contfr;
using wofz::eval_omega;
using wofz::eval_subdom2;
using wofz::eval_w;
using wofz::Regime;

namespace {

const wofz::CoefficientTable& table() {
    static const wofz::CoefficientTable t = wofz::build_table();
    return t;
}

double rel(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

// reference w(z) values computed with 40-digit arithmetic
constexpr double kW11_re = 0.3047442052569125924571;
constexpr double kW11_im = 0.2082189382028316272874;
constexpr double kW32_re = 0.09271076642644333399002;
constexpr double kW32_im = 0.1283169622282615753981;

// 40-level continued fraction, used as an independent cross-check only.
Complex deep_contfr(Complex z, int levels) {
    Complex cf = (levels * 0.5) / z;
    for (int k = levels - 1; k >= 1; --k) cf = (k * 0.5) / (z - cf);
    return Complex{0.0, 0.5641895835477562869} / (z - cf);
}

} // namespace

TEST_CASE("dispatch follows the strict boundary rules") {
    CHECK(dispatch({8.0, 0.0}) == Regime::SecondarySubdomain);
    CHECK(dispatch({8.0000001, 0.0}) == Regime::External);
    CHECK(dispatch({1.0, 1.0}) == Regime::PrimarySubdomain);
    CHECK(dispatch({6.0, 0.1}) == Regime::SecondarySubdomain);
    CHECK(dispatch({6.0, 0.30000001}) == Regime::PrimarySubdomain);
    CHECK(dispatch({0.0, 0.0}) == Regime::SecondarySubdomain);
    CHECK(dispatch({0.0, 9.0}) == Regime::External);
}

TEST_CASE("w(0) is exactly one") {
    const auto r = eval_w({0.0, 0.0}, table());
    CHECK(r.value.real() == 1.0);
    CHECK(r.value.imag() == 0.0);
    CHECK(r.regime == Regime::SecondarySubdomain);
    CHECK_FALSE(r.reflected);
}

TEST_CASE("rational sum matches the oracle value at 1+1i") {
    const Complex shifted{1.0, 1.0 + 2.75 / 2.0};
    const Complex v = eval_omega(shifted, table());
    CHECK(rel(v.real(), kW11_re) <= 1e-13);
    CHECK(rel(v.imag(), kW11_im) <= 1e-13);
}

TEST_CASE("w(iy) is purely real") {
    const Complex v = eval_w({0.0, 2.0}, table()).value;
    CHECK(std::abs(v.imag()) <= 1e-15);
    CHECK(rel(v.real(), 0.2553956763105057438651) <= 1e-13);
}

TEST_CASE("rational sum agrees with a deep continued fraction at 5+5i") {
    const Complex a = eval_w({5.0, 5.0}, table()).value;
    const Complex b = deep_contfr({5.0, 5.0}, 40);
    CHECK(rel(a.real(), b.real()) <= 1e-13);
    CHECK(rel(a.imag(), b.imag()) <= 1e-13);
}

TEST_CASE("pole-free form reproduces the real-axis laws") {
    const Complex v = eval_subdom2({1.0, 0.0}, table());
    CHECK(rel(v.real(), std::exp(-1.0)) <= 1e-13);
    CHECK(rel(v.imag(), 0.607157705841393729115) <= 1e-13);

    const Complex z0 = eval_subdom2({0.0, 0.0}, table());
    CHECK(z0.real() == 1.0);
    CHECK(z0.imag() == 0.0);
}

TEST_CASE("continued fraction limiting forms") {
    const Complex far = eval_contfr({1e6, 0.0});
    const Complex lead = Complex{0.0, 0.5641895835477562869} / Complex{1e6, 0.0};
    CHECK(std::abs(far - lead) / std::abs(lead) <= 1e-12);

    const Complex imag_axis = eval_contfr({0.0, 10.0});
    CHECK(rel(imag_axis.real(), 0.05614099274382258585752) <= 1e-13);
    CHECK(std::abs(imag_axis.imag()) <= 1e-15);

    const Complex v = eval_contfr({9.0, 0.5});
    CHECK(rel(v.real(), 0.003537805942126848009701) <= 1e-13);
    CHECK(rel(v.imag(), 0.06288174666077394884934) <= 1e-13);
}

TEST_CASE("reflection handles the lower half-plane") {
    const auto below = eval_w({1.0, -1.0}, table());
    CHECK(below.reflected);
    const Complex z{1.0, -1.0};
    const Complex expect = 2.0 * std::exp(-z * z) - Complex{kW11_re, -kW11_im};
    CHECK(std::abs(below.value - expect) / std::abs(expect) <= 1e-13);
}

TEST_CASE("conjugate symmetry across the imaginary axis") {
    const Complex a = eval_w({3.0, 2.0}, table()).value;
    const Complex b = eval_w({-3.0, 2.0}, table()).value;
    CHECK(rel(b.real(), a.real()) <= 1e-14);
    CHECK(rel(-b.imag(), a.imag()) <= 1e-14);
    CHECK(rel(a.real(), kW32_re) <= 1e-13);
    CHECK(rel(a.imag(), kW32_im) <= 1e-13);
}

TEST_CASE("non-finite input is rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(eval_w({nan, 0.0}, table()), std::domain_error);
    CHECK_THROWS_AS(eval_w({0.0, inf}, table()), std::domain_error);
    CHECK_THROWS_AS(eval_batch({{0.0, 0.0}, {inf, 0.0}}, table()), std::domain_error);
}

TEST_CASE("batch evaluation preserves order, regimes and bits") {
    const std::vector<Complex> pts{{0.0, 0.0}, {1.0, 1.0}, {10.0, 10.0}};
    const auto out = eval_batch(pts, table());
    REQUIRE(out.size() == 3);
    CHECK(out[0].regime == Regime::SecondarySubdomain);
    CHECK(out[1].regime == Regime::PrimarySubdomain);
    CHECK(out[2].regime == Regime::External);

    CHECK(eval_batch({}, table()).empty());

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-12.0, 12.0);
    std::vector<Complex> random_pts;
    for (int i = 0; i < 400; ++i) random_pts.push_back({u(rng), u(rng)});
    const auto serial = eval_batch(random_pts, table(), 1);
    const auto parallel = eval_batch(random_pts, table(), 4);
    for (std::size_t i = 0; i < random_pts.size(); ++i) {
        const Complex direct = eval_w(random_pts[i], table()).value;
        CHECK(serial[i].value.real() == direct.real());
        CHECK(serial[i].value.imag() == direct.imag());
        CHECK(parallel[i].value.real() == direct.real());
        CHECK(parallel[i].value.imag() == direct.imag());
    }
}

TEST_CASE("the small-y rectangle never dispatches externally") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ux(1e-9, 6.0), uy(1e-9, 0.1);
    for (int i = 0; i < 100000; ++i) {
        const Complex z{ux(rng), uy(rng)};
        CHECK(dispatch(z) != Regime::External);
    }
}

TEST_CASE("reflection identity over the disk |z| <= 15") {
    // residual normalized by the largest participating magnitude: near the
    // imaginary axis 2 exp(-z^2) dwarfs w(z) and fixes the attainable scale
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-15.0, 15.0);
    int tested = 0;
    double worst = 0.0;
    while (tested < 10000) {
        const Complex z{u(rng), u(rng)};
        if (std::norm(z) > 225.0) continue;
        ++tested;
        const Complex lhs = eval_w(z, table()).value;
        const Complex expz = 2.0 * std::exp(-z * z);
        const Complex rhs = expz - eval_w(-z, table()).value;
        const double scale = std::max({std::abs(lhs), std::abs(expz), 1e-300});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("x-conjugate symmetry on random upper-half points") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> ux(0.01, 14.0), uy(0.0, 14.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = ux(rng), y = uy(rng);
        const Complex a = eval_w({x, y}, table()).value;
        const Complex b = eval_w({-x, y}, table()).value;
        CHECK(std::abs(b.real() - a.real()) <= 1e-14 * std::abs(a.real()));
        CHECK(std::abs(b.imag() + a.imag()) <= 1e-14 * std::abs(a.imag()));
    }
}

TEST_CASE("Voigt positivity over the sampled quarter plane") {
    for (int i = 0; i <= 60; ++i)
        for (int j = 0; j <= 60; ++j) {
            const Complex z{15.0 * i / 60, 15.0 * j / 60};
            CHECK(eval_w(z, table()).value.real() > 0.0);
        }
}
