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

// wofz: evaluate the complex error function family, emit relative-error
// maps and pole tables, run throughput benchmarks.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "wofz/wofz.hpp"

namespace {

enum class Function { Wofz, Erf, Dawson, Fresnel, Voigt, Plasma };

int run_eval(const wofz::CoefficientTable& table, const std::string& input,
             Function fn) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!input.empty() && input != "-") {
        file.open(input);
        if (!file) {
            std::cerr << "wofz: cannot open input file '" << input << "'\n";
            return 2;
        }
        in = &file;
    }

    std::string line;
    std::size_t lineno = 0;
    try {
        while (std::getline(*in, line)) {
            ++lineno;
            const auto p = wofz::parse_point_line(line, lineno);
            if (!p) continue;
            const double x = p->real(), y = p->imag();
            std::complex<double> w;
            try {
                switch (fn) {
                    case Function::Wofz: w = wofz::eval_w(*p, table).value; break;
                    case Function::Erf: w = wofz::erf_c(*p, table); break;
                    case Function::Dawson: w = wofz::dawson(*p, table); break;
                    case Function::Fresnel: w = wofz::fresnel(*p, table); break;
                    case Function::Plasma: w = wofz::plasma_dispersion(*p, table); break;
                    case Function::Voigt: w = {wofz::voigt(x, y, table), 0.0}; break;
                }
            } catch (const std::domain_error& e) {
                std::cout << wofz::format_double(x) << "," << wofz::format_double(y)
                          << ",error," << e.what() << "\n";
                continue;
            }
            std::cout << wofz::format_eval_line(x, y, w) << "\n";
        }
    } catch (const wofz::ParseError& e) {
        std::cerr << "wofz: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run_errmap(const wofz::CoefficientTable& table, double xmin, double xmax,
               double ymin, double ymax, int nx, int ny, const std::string& part,
               const std::string& out, unsigned threads) {
    const wofz::Part p = part == "im" ? wofz::Part::Im : wofz::Part::Re;
    wofz::ErrorGrid grid;
    try {
        grid = wofz::error_map(xmin, xmax, ymin, ymax, nx, ny, p, table, threads);
    } catch (const std::exception& e) {
        std::cerr << "wofz: errmap failed: " << e.what() << "\n";
        return 2;
    }
    if (out.empty() || out == "-") {
        wofz::write_csv(grid, std::cout);
    } else {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "wofz: cannot open output file '" << out << "'\n";
            return 2;
        }
        wofz::write_csv(grid, os);
    }
    std::cerr << "worst " << (p == wofz::Part::Re ? "delta_re" : "delta_im")
              << " = " << wofz::format_double(grid.worst) << " at ("
              << wofz::format_double(grid.worst_x) << ", "
              << wofz::format_double(grid.worst_y) << "); worst absolute-mode = "
              << wofz::format_double(grid.worst_absolute) << "\n";
    return 0;
}

int run_poles(const wofz::CoefficientTable& table) {
    wofz::PoleSet ps;
    try {
        ps = wofz::locate_poles(table);
    } catch (const std::exception& e) {
        std::cerr << "wofz: " << e.what() << "\n";
        return 2;
    }
    std::cout << "kind,m,root,re,im,abs,first_quadrant\n";
    for (std::size_t m = 0; m < ps.quartic.size(); ++m) {
        const wofz::QuarticRoots& r = ps.quartic[m];
        const std::complex<double> roots[4] = {r.z1, r.z2, r.z3, r.z4};
        for (int k = 0; k < 4; ++k) {
            const bool fq = roots[k].real() > 0.0 && roots[k].imag() > 0.0;
            std::cout << "quartic," << m + 1 << ",z" << k + 1 << ","
                      << wofz::format_double(roots[k].real()) << ","
                      << wofz::format_double(roots[k].imag()) << ","
                      << wofz::format_double(std::abs(roots[k])) << ","
                      << (fq ? 1 : 0) << "\n";
        }
    }
    for (std::size_t i = 0; i < ps.omega_poles.size(); ++i) {
        const std::complex<double> p = ps.omega_poles[i];
        std::cout << "rational," << i / 2 + 1 << ",p" << i % 2 + 1 << ","
                  << wofz::format_double(p.real()) << ","
                  << wofz::format_double(p.imag()) << ","
                  << wofz::format_double(std::abs(p)) << ",0\n";
    }
    return 0;
}

int run_bench_cmd(const wofz::CoefficientTable& table, const std::string& domain,
                  std::size_t n, std::uint64_t seed, unsigned threads, bool csv) {
    static const std::map<std::string, wofz::DomainKind> kinds{
        {"smally", wofz::DomainKind::SmallY},
        {"disk15", wofz::DomainKind::Disk15},
        {"disk10k", wofz::DomainKind::Disk10k},
        {"mixed", wofz::DomainKind::Mixed},
    };
    const auto it = kinds.find(domain);
    if (it == kinds.end()) {
        std::cerr << "wofz: unknown domain '" << domain << "'\n";
        return 1;
    }
    wofz::BenchReport rep;
    try {
        rep = wofz::run_bench({it->second, n, seed}, table, threads);
    } catch (const std::exception& e) {
        std::cerr << "wofz: bench failed: " << e.what() << "\n";
        return 2;
    }
    if (csv) {
        std::cout << "domain,n,seed,threads,wall_seconds,points_per_second,"
                     "checksum_re,checksum_im,external,primary,secondary\n"
                  << domain << "," << n << "," << seed << "," << threads << ","
                  << wofz::format_double(rep.wall_seconds) << ","
                  << wofz::format_double(rep.points_per_second) << ","
                  << wofz::format_double(rep.checksum.real()) << ","
                  << wofz::format_double(rep.checksum.imag()) << ","
                  << rep.regime_counts[0] << "," << rep.regime_counts[1] << ","
                  << rep.regime_counts[2] << "\n";
    } else {
        std::cout << "domain:    " << domain << "\n"
                  << "points:    " << n << " (seed " << seed << ", threads "
                  << threads << ")\n"
                  << "wall:      " << rep.wall_seconds << " s\n"
                  << "rate:      " << rep.points_per_second << " points/s\n"
                  << "checksum:  " << wofz::format_double(rep.checksum.real())
                  << " " << wofz::format_double(rep.checksum.imag()) << "\n"
                  << "regimes:   external " << rep.regime_counts[0]
                  << ", primary " << rep.regime_counts[1] << ", secondary "
                  << rep.regime_counts[2] << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fast pole-free evaluator for the complex error function w(z)"};
    app.require_subcommand(1);

    wofz::Params params;
    app.add_option("--h", params.h, "sampling step (default 0.25)");
    app.add_option("--varsigma", params.varsigma, "imaginary shift (default 2.75)");
    app.add_option("--M", params.M, "rational term count (default 23)");
    app.add_option("--N", params.N, "sampling half-width (default 23)");
    bool no_extra_terms = false;
    app.add_flag("--no-extra-terms", no_extra_terms,
                 "use M instead of M+2 terms in the pole-free form");

    auto* eval = app.add_subcommand("eval", "evaluate a function over x,y lines");
    std::string input;
    eval->add_option("--input,-i", input, "point file ('-' or empty for stdin)");
    std::string fname = "wofz";
    eval->add_option("--function,-f", fname, "wofz|erf|dawson|fresnel|voigt|plasma")
        ->check(CLI::IsMember({"wofz", "erf", "dawson", "fresnel", "voigt", "plasma"}));

    auto* errmap = app.add_subcommand("errmap", "relative-error map as CSV");
    double xmin = 0.0, xmax = 15.0, ymin = 0.0, ymax = 15.0;
    int nx = 500, ny = 500;
    std::string part = "re", out;
    unsigned map_threads = std::thread::hardware_concurrency();
    errmap->add_option("--xmin", xmin);
    errmap->add_option("--xmax", xmax);
    errmap->add_option("--ymin", ymin);
    errmap->add_option("--ymax", ymax);
    errmap->add_option("--nx", nx);
    errmap->add_option("--ny", ny);
    errmap->add_option("--part", part)->check(CLI::IsMember({"re", "im"}));
    errmap->add_option("--out,-o", out, "output CSV file (default stdout)");
    errmap->add_option("--threads", map_threads);

    auto* poles = app.add_subcommand("poles", "pole table of both rational forms");

    auto* bench = app.add_subcommand("bench", "throughput benchmark");
    std::string domain = "smally";
    std::size_t n = 1000000;
    std::uint64_t seed = 1;
    unsigned bench_threads = 1;
    bool bench_csv = false;
    bench->add_option("--domain", domain, "smally|disk15|disk10k|mixed");
    bench->add_option("--n", n, "point count");
    bench->add_option("--seed", seed, "generator seed");
    bench->add_option("--threads", bench_threads, "evaluation threads");
    bench->add_flag("--csv", bench_csv, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    params.extra_terms = !no_extra_terms;
    wofz::CoefficientTable table;
    try {
        table = wofz::build_table(params);
    } catch (const std::invalid_argument& e) {
        std::cerr << "wofz: " << e.what() << "\n";
        return 1;
    }

    if (eval->parsed()) {
        static const std::map<std::string, Function> fns{
            {"wofz", Function::Wofz},   {"erf", Function::Erf},
            {"dawson", Function::Dawson}, {"fresnel", Function::Fresnel},
            {"voigt", Function::Voigt}, {"plasma", Function::Plasma}};
        return run_eval(table, input, fns.at(fname));
    }
    if (errmap->parsed())
        return run_errmap(table, xmin, xmax, ymin, ymax, nx, ny, part, out, map_threads);
    if (poles->parsed()) return run_poles(table);
    if (bench->parsed())
        return run_bench_cmd(table, domain, n, seed, bench_threads, bench_csv);
    return 1;
}
