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

#ifndef WOFZ_IO_HPP
#define WOFZ_IO_HPP

#include <cctype>
#include <charconv>
#include <complex>
#include <cstdio>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Point-file parsing ("x,y" per line, '#' comments) and round-trip-exact
// numeric formatting for the CLI.

namespace wofz {

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t l, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || p != end) return std::nullopt;
    return v;
}

} // namespace detail

/// Parse one "x,y" line; empty/comment lines yield nullopt.  Malformed lines
/// throw ParseError carrying the 1-based line number.
inline std::optional<std::complex<double>> parse_point_line(std::string_view line,
                                                            std::size_t lineno) {
    const std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') return std::nullopt;
    const std::size_t comma = body.find(',');
    if (comma == std::string_view::npos)
        throw ParseError(lineno, "expected 'x,y'");
    const auto x = detail::parse_double(body.substr(0, comma));
    const auto y = detail::parse_double(body.substr(comma + 1));
    if (!x || !y) throw ParseError(lineno, "malformed number in 'x,y'");
    return std::complex<double>{*x, *y};
}

inline std::vector<std::complex<double>> read_points(std::istream& in) {
    std::vector<std::complex<double>> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto p = parse_point_line(line, lineno)) pts.push_back(*p);
    }
    return pts;
}

/// 17 significant digits: enough for bit-exact double round trips.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_eval_line(double x, double y, std::complex<double> w) {
    return format_double(x) + "," + format_double(y) + "," +
           format_double(w.real()) + "," + format_double(w.imag());
}

} // namespace wofz

#endif // WOFZ_IO_HPP
