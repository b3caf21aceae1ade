// voigt-cli: evaluation, error maps and timing runs for the w(z) evaluators.
//
//   voigt-cli eval   --algo twodom --y 1e-8 --x-range -5:5:1001 --part both --out w.csv
//   voigt-cli errmap --algo fadsamp --x-range 0:50:1000 --y-range 1e-8:50:200 --metric rel --part re
//   voigt-cli bench  --points 1000000 --ranges 10,100,1000 --repeats 10
//
// Exit codes: 0 success, 1 numerical or I/O error, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "voigt/voigt.hpp"

namespace {

using voigt::complex;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct Range {
    double a = 0.0, b = 0.0;
    std::size_t n = 0;
};

std::optional<double> parse_double(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

Range parse_range(const std::string& text, bool positive) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw CLI::ValidationError("range", "expected a:b:n, got '" + text + "'");
    const auto a = parse_double(std::string_view(text).substr(0, c1));
    const auto b = parse_double(std::string_view(text).substr(c1 + 1, c2 - c1 - 1));
    const auto n = parse_double(std::string_view(text).substr(c2 + 1));
    if (!a || !b || !n || !std::isfinite(*a) || !std::isfinite(*b))
        throw CLI::ValidationError("range", "expected a:b:n, got '" + text + "'");
    if (!(*n >= 1.0) || *n != std::floor(*n) || *n > 1e9)
        throw CLI::ValidationError("range", "point count must be a positive integer in '" + text + "'");
    if (*a > *b) throw CLI::ValidationError("range", "lower bound exceeds upper bound in '" + text + "'");
    if (positive && !(*a > 0.0)) throw CLI::ValidationError("range", "log-spaced range needs a > 0 in '" + text + "'");
    return {*a, *b, static_cast<std::size_t>(*n)};
}

std::vector<double> linear(const Range& r) {
    std::vector<double> v(r.n);
    for (std::size_t i = 0; i < r.n; ++i)
        v[i] = r.n == 1 ? r.a : r.a + (r.b - r.a) * double(i) / double(r.n - 1);
    if (r.n > 1) v.back() = r.b;
    return v;
}

std::vector<double> logarithmic(const Range& r) {
    const double la = std::log10(r.a), lb = std::log10(r.b);
    std::vector<double> v(r.n);
    for (std::size_t i = 0; i < r.n; ++i)
        v[i] = r.n == 1 ? r.a : std::pow(10.0, la + (lb - la) * double(i) / double(r.n - 1));
    v.front() = r.a;
    if (r.n > 1) v.back() = r.b;
    return v;
}

std::vector<double> read_x_column(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::vector<double> xs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view field = std::string_view(line).substr(0, line.find(','));
        if (field.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        const auto v = parse_double(field);
        if (!v) {
            if (xs.empty() && lineno == 1) continue;  // header
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": not a number");
        }
        xs.push_back(*v);
    }
    return xs;
}

// Shortest text that still round-trips: 17 significant digits, '.' separator, no locale.
void put(std::string& out, double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    void close() {
        stream().flush();
        if (!stream()) throw std::runtime_error("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

enum class Algo { twodom, fadsamp, wtrap, cf };
enum class Part { re, im, both };
enum class Metric { abs, rel };

const std::map<std::string, Algo> kAlgos = {
    {"twodom", Algo::twodom}, {"fadsamp", Algo::fadsamp}, {"wtrap", Algo::wtrap}, {"cf", Algo::cf}};
const std::map<std::string, Part> kParts = {{"re", Part::re}, {"im", Part::im}, {"both", Part::both}};
const std::map<std::string, voigt::GridDensity> kDensities = {{"basic", voigt::GridDensity::basic},
                                                              {"enhanced", voigt::GridDensity::enhanced}};

/// w(x + iy) for every x with the selected algorithm.
std::vector<complex> evaluate(Algo algo, std::span<const double> xs, double y, const voigt::TwoDomainConfig& cfg) {
    if (algo == Algo::twodom) return voigt::two_domain(xs, y, cfg);
    std::vector<complex> zs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) zs[i] = {xs[i], y};
    switch (algo) {
        case Algo::fadsamp: return voigt::fadsamp(zs);
        case Algo::wtrap: return voigt::wtrap(zs);
        case Algo::cf: {
            std::vector<complex> out(zs.size());
            for (std::size_t i = 0; i < zs.size(); ++i) out[i] = voigt::w_continued_fraction(zs[i]);
            return out;
        }
        case Algo::twodom: break;
    }
    return {};
}

struct EvalArgs {
    std::string algo = "twodom";
    double y = 0.0;
    std::string x_range, input, out = "-", part, density = "basic";
    std::optional<int> opt;
};

int run_eval(const EvalArgs& a) {
    Part part = a.part.empty() ? Part::both : kParts.at(a.part);
    if (a.opt) {
        const auto o = voigt::output_option(*a.opt);
        const Part from_opt = o == voigt::OutputOption::real_part   ? Part::re
                              : o == voigt::OutputOption::imag_part ? Part::im
                                                                     : Part::both;
        if (!a.part.empty() && from_opt != part) throw CLI::ValidationError("--opt", "conflicts with --part");
        part = from_opt;
    }
    voigt::TwoDomainConfig cfg;
    cfg.density = kDensities.at(a.density);
    const std::vector<double> xs = a.input.empty() ? linear(parse_range(a.x_range, false)) : read_x_column(a.input);
    const auto w = evaluate(kAlgos.at(a.algo), xs, a.y, cfg);

    Output out(a.out);
    std::string text = part == Part::both ? "x,re,im\n" : part == Part::re ? "x,k\n" : "x,l\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        put(text, xs[i]);
        if (part != Part::im) {
            text += ',';
            put(text, w[i].real());
        }
        if (part != Part::re) {
            text += ',';
            put(text, w[i].imag());
        }
        text += '\n';
    }
    out.stream() << text;
    out.close();
    return 0;
}

struct ErrmapArgs {
    std::string algo = "twodom";
    std::string x_range, y_range, metric = "rel", part = "re", out = "-", density = "basic";
};

int run_errmap(const ErrmapArgs& a) {
    const Algo algo = kAlgos.at(a.algo);
    const Metric metric = a.metric == "abs" ? Metric::abs : Metric::rel;
    const bool real = a.part == "re";
    voigt::TwoDomainConfig cfg;
    cfg.density = kDensities.at(a.density);
    const auto xs = linear(parse_range(a.x_range, false));
    const auto ys = logarithmic(parse_range(a.y_range, true));

    Output out(a.out);
    std::string text = "x,y,err\n";
    double worst = -1.0, wx = 0.0, wy = 0.0;
    std::size_t skipped = 0;
    for (double y : ys) {
        const auto w = evaluate(algo, xs, y, cfg);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const complex ref = voigt::w_reference({xs[i], y}).value;
            const double r = real ? ref.real() : ref.imag();
            const double v = real ? w[i].real() : w[i].imag();
            double err = std::abs(v - r);
            if (metric == Metric::rel) {
                if (r == 0.0) {  // relative error undefined
                    ++skipped;
                    continue;
                }
                err /= std::abs(r);
            }
            put(text, xs[i]);
            text += ',';
            put(text, y);
            text += ',';
            put(text, err);
            text += '\n';
            if (err > worst) worst = err, wx = xs[i], wy = y;
        }
        out.stream() << text;
        text.clear();
    }
    out.close();
    std::ostream& info = a.out == "-" ? std::cerr : std::cout;
    info << "max " << (metric == Metric::rel ? "relative" : "absolute") << " error (" << (real ? "re" : "im")
         << "): " << std::setprecision(3) << std::scientific << worst << " at x = " << std::setprecision(17)
         << std::defaultfloat << wx << ", y = " << wy << "\n";
    if (skipped) info << "skipped " << skipped << " points with a zero reference value\n";
    return 0;
}

struct BenchArgs {
    double points = 1e6;
    std::vector<double> ranges = {10.0, 100.0, 1000.0};
    double y = 1e-8;
    int repeats = 10;
    std::vector<std::string> algos = {"twodom", "fadsamp", "wtrap"};
    std::string out;
};

int run_bench(const BenchArgs& a) {
    if (!(a.points >= 1.0) || a.points != std::floor(a.points) || a.points > 1e9)
        throw CLI::ValidationError("--points", "must be a positive integer");
    if (a.repeats < 1) throw CLI::ValidationError("--repeats", "must be at least 1");
    for (double r : a.ranges)
        if (!(r > 0.0) || !std::isfinite(r)) throw CLI::ValidationError("--ranges", "half-ranges must be positive");
    if (!(a.y > 0.0) || !std::isfinite(a.y)) throw CLI::ValidationError("--y", "must be positive");
    for (const auto& name : a.algos)
        if (name == "cf") throw CLI::ValidationError("--algos", "cf is not a benchmarked algorithm");

    const auto n = static_cast<std::size_t>(a.points);
    std::vector<std::vector<double>> mean(a.algos.size(), std::vector<double>(a.ranges.size()));
    std::vector<std::vector<double>> checksum = mean;
    for (std::size_t j = 0; j < a.ranges.size(); ++j) {
        const auto xs = linear({-a.ranges[j], a.ranges[j], n});
        for (std::size_t i = 0; i < a.algos.size(); ++i) {
            const Algo algo = kAlgos.at(a.algos[i]);
            std::vector<complex> w;
            const auto start = std::chrono::steady_clock::now();
            for (int r = 0; r < a.repeats; ++r) w = evaluate(algo, xs, a.y, {});
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            mean[i][j] = elapsed.count() / a.repeats;
            double sum = 0.0;
            for (const auto& v : w) sum += v.real() + v.imag();
            checksum[i][j] = sum;
        }
    }

    if (!a.out.empty()) {
        Output out(a.out);
        std::string text = "algorithm,half_range,points,repeats,mean_seconds,checksum\n";
        for (std::size_t i = 0; i < a.algos.size(); ++i)
            for (std::size_t j = 0; j < a.ranges.size(); ++j) {
                text += a.algos[i] + ',';
                put(text, a.ranges[j]);
                text += ',' + std::to_string(n) + ',' + std::to_string(a.repeats) + ',';
                put(text, mean[i][j]);
                text += ',';
                put(text, checksum[i][j]);
                text += '\n';
            }
        out.stream() << text;
        out.close();
    }

    std::ostringstream table;
    table << "mean run-time in seconds, " << n << " points, y = " << a.y << ", " << a.repeats << " repeats\n";
    table << std::left << std::setw(10) << "range";
    for (const auto& name : a.algos) table << std::right << std::setw(12) << name;
    for (const auto& name : a.algos) table << std::right << std::setw(24) << ("checksum " + name);
    table << "\n";
    for (std::size_t j = 0; j < a.ranges.size(); ++j) {
        table << std::left << std::setw(10) << a.ranges[j] << std::right << std::fixed << std::setprecision(5);
        for (std::size_t i = 0; i < a.algos.size(); ++i) table << std::setw(12) << mean[i][j];
        table << std::scientific << std::setprecision(15);
        for (std::size_t i = 0; i < a.algos.size(); ++i) table << std::setw(24) << checksum[i][j];
        table << std::defaultfloat << "\n";
    }
    std::cout << table.str();
    return 0;
}

CLI::Option* choice(CLI::App& app, const std::string& name, std::string& target, std::vector<std::string> values,
                    const std::string& help) {
    return app.add_option(name, target, help)->check(CLI::IsMember(std::move(values)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluate, map errors of, and time approximations of the Faddeeva function w(z)"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate w(x + iy) on a set of x at one y and write CSV");
    choice(*eval, "--algo", ev.algo, {"twodom", "fadsamp", "wtrap", "cf"}, "Algorithm")->capture_default_str();
    eval->add_option("--y", ev.y, "Imaginary part y")->required();
    auto* xr = eval->add_option("--x-range", ev.x_range, "Equidistant x values a:b:n");
    auto* in = eval->add_option("--input", ev.input, "CSV file whose first column holds x")->check(CLI::ExistingFile);
    xr->excludes(in);
    choice(*eval, "--part", ev.part, {"re", "im", "both"}, "Output part (default both)");
    eval->add_option("--opt", ev.opt, "Output option 1 (K), 2 (L) or 3 (w)");
    choice(*eval, "--density", ev.density, {"basic", "enhanced"}, "Two-domain grid density")->capture_default_str();
    eval->add_option("--out", ev.out, "Output CSV path, - for standard output")->capture_default_str();

    ErrmapArgs em;
    auto* errmap = app.add_subcommand("errmap", "Error of an algorithm against the reference over an x-y grid");
    choice(*errmap, "--algo", em.algo, {"twodom", "fadsamp", "wtrap", "cf"}, "Algorithm")->capture_default_str();
    errmap->add_option("--x-range", em.x_range, "Equidistant x values a:b:n")->required();
    errmap->add_option("--y-range", em.y_range, "Log-spaced y values a:b:n")->required();
    choice(*errmap, "--metric", em.metric, {"abs", "rel"}, "Error metric")->capture_default_str();
    choice(*errmap, "--part", em.part, {"re", "im"}, "Part compared")->capture_default_str();
    choice(*errmap, "--density", em.density, {"basic", "enhanced"}, "Two-domain grid density")->capture_default_str();
    errmap->add_option("--out", em.out, "Output CSV path, - for standard output")->capture_default_str();

    BenchArgs bn;
    auto* bench = app.add_subcommand("bench", "Mean run-time per algorithm and x half-range");
    bench->add_option("--points", bn.points, "Equidistant points per run")->capture_default_str();
    bench->add_option("--ranges", bn.ranges, "x half-ranges")->delimiter(',')->capture_default_str();
    bench->add_option("--y", bn.y, "Imaginary part y")->capture_default_str();
    bench->add_option("--repeats", bn.repeats, "Timed evaluations per cell")->capture_default_str();
    bench->add_option("--algos", bn.algos, "Algorithms")
        ->delimiter(',')
        ->check(CLI::IsMember({"twodom", "fadsamp", "wtrap"}))
        ->capture_default_str();
    bench->add_option("--out", bn.out, "Optional CSV path");

    try {
        app.parse(argc, argv);
        if (*eval && ev.x_range.empty() && ev.input.empty())
            throw CLI::RequiredError("one of --x-range or --input");
        if (*eval) return run_eval(ev);
        if (*errmap) return run_errmap(em);
        return run_bench(bn);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const voigt::InvalidOptionError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
