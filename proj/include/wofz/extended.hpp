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

#ifndef WOFZ_EXTENDED_HPP
#define WOFZ_EXTENDED_HPP

#include <cmath>
#include <complex>
#include <cstdlib>

// Error-free transformations and the double-double / quad-double types used
// by the reference oracle.  The algorithms are the classic Dekker/Knuth
// building blocks plus the Hida-Li-Bailey expansion arithmetic.

namespace wofz {

namespace eft {

// s = fl(a+b), err = exact residual.  Requires |a| >= |b|.
inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

// s = fl(a+b), err = exact residual.  No magnitude requirement.
inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// p = fl(a*b), err = exact residual.
inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

inline void three_sum(double& a, double& b, double& c) {
    double t1, t2, t3;
    t1 = two_sum(a, b, t2);
    a = two_sum(c, t1, t3);
    b = two_sum(t2, t3, c);
}

inline void three_sum2(double& a, double& b, double c) {
    double t1, t2, t3;
    t1 = two_sum(a, b, t2);
    a = two_sum(c, t1, t3);
    b = t2 + t3;
}

} // namespace eft

// ---------------------------------------------------------------------------
// Double-double: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// ---------------------------------------------------------------------------

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
    double s1, s2, t1, t2;
    s1 = eft::two_sum(a.hi, b.hi, s2);
    t1 = eft::two_sum(a.lo, b.lo, t2);
    s2 += t1;
    s1 = eft::quick_two_sum(s1, s2, s2);
    s2 += t2;
    s1 = eft::quick_two_sum(s1, s2, s2);
    return {s1, s2};
}

inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) {
    return a + (-b);
}

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
    double p, e;
    p = eft::two_prod(a.hi, b.hi, e);
    e += a.hi * b.lo + a.lo * b.hi;
    p = eft::quick_two_sum(p, e, e);
    return {p, e};
}

inline DoubleDouble operator*(const DoubleDouble& a, double b) {
    double p, e;
    p = eft::two_prod(a.hi, b, e);
    e += a.lo * b;
    p = eft::quick_two_sum(p, e, e);
    return {p, e};
}

inline DoubleDouble operator*(double a, const DoubleDouble& b) { return b * a; }

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
    double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    q1 = eft::quick_two_sum(q1, q2, q2);
    DoubleDouble q{q1, q2};
    return q + DoubleDouble(q3);
}

inline DoubleDouble dd_abs(const DoubleDouble& a) { return a.hi < 0.0 ? -a : a; }

inline bool operator<(const DoubleDouble& a, const DoubleDouble& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}

// ---------------------------------------------------------------------------
// ExtendedComplex: complex number with double-double parts (~31 digits).
// ---------------------------------------------------------------------------

struct ExtendedComplex {
    DoubleDouble re;
    DoubleDouble im;

    std::complex<double> to_complex() const {
        return {re.to_double(), im.to_double()};
    }
};

inline ExtendedComplex operator+(const ExtendedComplex& a, const ExtendedComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

inline ExtendedComplex operator-(const ExtendedComplex& a, const ExtendedComplex& b) {
    return {a.re - b.re, a.im - b.im};
}

inline ExtendedComplex operator*(const ExtendedComplex& a, const ExtendedComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ExtendedComplex operator*(const ExtendedComplex& a, double s) {
    return {a.re * s, a.im * s};
}

// (r + 0i) / z
inline ExtendedComplex div_real(double r, const ExtendedComplex& z) {
    DoubleDouble den = z.re * z.re + z.im * z.im;
    return {(z.re * r) / den, -(z.im * r) / den};
}

// (0 + s*i) / z  with s a double-double scalar
inline ExtendedComplex div_imag(const DoubleDouble& s, const ExtendedComplex& z) {
    DoubleDouble den = z.re * z.re + z.im * z.im;
    return {(s * z.im) / den, (s * z.re) / den};
}

namespace detail {

// ---------------------------------------------------------------------------
// Quad-double (four-term expansion, ~62 digits).  Only the operations the
// oracle's series needs.  "Sloppy" add/mul in the Hida-Li-Bailey style.
// ---------------------------------------------------------------------------

struct Quad {
    double d[4] = {0.0, 0.0, 0.0, 0.0};

    constexpr Quad() = default;
    constexpr Quad(double x) : d{x, 0.0, 0.0, 0.0} {}
    constexpr Quad(double a, double b, double c, double e) : d{a, b, c, e} {}

    double to_double() const { return d[0] + d[1]; }
};

inline void quad_renorm(double& c0, double& c1, double& c2, double& c3, double c4) {
    using eft::quick_two_sum;
    double s0, s1, s2 = 0.0, s3 = 0.0;
    s0 = quick_two_sum(c3, c4, c4);
    s0 = quick_two_sum(c2, s0, c3);
    s0 = quick_two_sum(c1, s0, c2);
    c0 = quick_two_sum(c0, s0, c1);

    s0 = c0;
    s1 = c1;
    if (s1 != 0.0) {
        s1 = quick_two_sum(s1, c2, s2);
        if (s2 != 0.0) {
            s2 = quick_two_sum(s2, c3, s3);
            if (s3 != 0.0) s3 += c4;
            else s2 = quick_two_sum(s2, c4, s3);
        } else {
            s1 = quick_two_sum(s1, c3, s2);
            if (s2 != 0.0) s2 = quick_two_sum(s2, c4, s3);
            else s1 = quick_two_sum(s1, c4, s2);
        }
    } else {
        s0 = quick_two_sum(s0, c2, s1);
        if (s1 != 0.0) {
            s1 = quick_two_sum(s1, c3, s2);
            if (s2 != 0.0) s2 = quick_two_sum(s2, c4, s3);
            else s1 = quick_two_sum(s1, c4, s2);
        } else {
            s0 = quick_two_sum(s0, c3, s1);
            if (s1 != 0.0) s1 = quick_two_sum(s1, c4, s2);
            else s0 = quick_two_sum(s0, c4, s1);
        }
    }
    c0 = s0; c1 = s1; c2 = s2; c3 = s3;
}

inline Quad quad_add(const Quad& a, const Quad& b) {
    using eft::two_sum;
    double s0, s1, s2, s3;
    double t0, t1, t2, t3;
    s0 = two_sum(a.d[0], b.d[0], t0);
    s1 = two_sum(a.d[1], b.d[1], t1);
    s2 = two_sum(a.d[2], b.d[2], t2);
    s3 = two_sum(a.d[3], b.d[3], t3);
    s1 = two_sum(s1, t0, t0);
    eft::three_sum(s2, t0, t1);
    eft::three_sum2(s3, t0, t2);
    t0 = t0 + t1 + t3;
    quad_renorm(s0, s1, s2, s3, t0);
    return {s0, s1, s2, s3};
}

inline Quad quad_neg(const Quad& a) { return {-a.d[0], -a.d[1], -a.d[2], -a.d[3]}; }

inline Quad quad_sub(const Quad& a, const Quad& b) { return quad_add(a, quad_neg(b)); }

inline Quad quad_mul(const Quad& a, const Quad& b) {
    using eft::two_prod;
    using eft::two_sum;
    double p0, p1, p2, p3, p4, p5;
    double q0, q1, q2, q3, q4, q5;
    double s0, s1, s2;
    double t0, t1;

    p0 = two_prod(a.d[0], b.d[0], q0);
    p1 = two_prod(a.d[0], b.d[1], q1);
    p2 = two_prod(a.d[1], b.d[0], q2);
    p3 = two_prod(a.d[0], b.d[2], q3);
    p4 = two_prod(a.d[1], b.d[1], q4);
    p5 = two_prod(a.d[2], b.d[0], q5);

    eft::three_sum(p1, p2, q0);

    eft::three_sum(p2, q1, q2);
    eft::three_sum(p3, p4, p5);
    s0 = two_sum(p2, p3, t0);
    s1 = two_sum(q1, p4, t1);
    s2 = q2 + p5;
    s1 = two_sum(s1, t0, t0);
    s2 += (t0 + t1);

    s1 += a.d[0] * b.d[3] + a.d[1] * b.d[2] + a.d[2] * b.d[1] + a.d[3] * b.d[0]
        + q0 + q3 + q4 + q5;
    quad_renorm(p0, p1, s0, s1, s2);
    return {p0, p1, s0, s1};
}

inline Quad quad_mul(const Quad& a, double b) { return quad_mul(a, Quad(b)); }

// Reciprocal via Newton iteration on x -> x*(2 - b*x); three refinements
// from a double seed reach full quad precision.
inline Quad quad_recip(const Quad& b) {
    Quad x(1.0 / b.d[0]);
    const Quad two(2.0);
    for (int i = 0; i < 3; ++i)
        x = quad_mul(x, quad_sub(two, quad_mul(b, x)));
    return x;
}

inline Quad quad_div(const Quad& a, const Quad& b) { return quad_mul(a, quad_recip(b)); }

inline DoubleDouble quad_to_dd(const Quad& a) {
    double e;
    double h = eft::quick_two_sum(a.d[0], a.d[1], e);
    e += a.d[2];
    return {h, e};
}

struct QuadComplex {
    Quad re, im;
};

inline QuadComplex qc_add(const QuadComplex& a, const QuadComplex& b) {
    return {quad_add(a.re, b.re), quad_add(a.im, b.im)};
}

// multiply by a complex<double>
inline QuadComplex qc_mul(const QuadComplex& a, std::complex<double> c) {
    Quad r = quad_sub(quad_mul(a.re, c.real()), quad_mul(a.im, c.imag()));
    Quad i = quad_add(quad_mul(a.re, c.imag()), quad_mul(a.im, c.real()));
    return {r, i};
}

inline QuadComplex qc_scale(const QuadComplex& a, const Quad& s) {
    return {quad_mul(a.re, s), quad_mul(a.im, s)};
}

// sqrt(pi) to quad precision
inline constexpr Quad kSqrtPi{1.772453850905516, 2.7298167483341145e-17,
                              1.8279754945612238e-34, 7.128213807789853e-51};

} // namespace detail

// 1/sqrt(pi) as a double-double constant.
inline constexpr DoubleDouble kInvSqrtPi{0.5641895835477563, -1.3051920548439228e-17};

} // namespace wofz

#endif // WOFZ_EXTENDED_HPP
