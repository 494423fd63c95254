#include "gl2/cli.hpp"

#include "gl2/box_fourier.hpp"
#include "gl2/counting.hpp"
#include "gl2/gauss_sums.hpp"
#include "gl2/parallel.hpp"
#include "gl2/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gl2::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint32_t kMinPrime = 3;
constexpr std::uint32_t kMaxPrime = 101;
// Values this small are cancellation noise of order 1e-14.
constexpr double kZeroSnap = 1e-9;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 12 significant digits, so output does not depend on the last bits of
// floating-point summation order.
double sig12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
}

double round12(double v) { return std::abs(v) < kZeroSnap ? 0.0 : sig12(v); }

// A ratio is zero exactly when its (snapped) numerator is.
double ratio12(double numerator, double ratio) { return round12(numerator) == 0 ? 0.0 : sig12(ratio); }

json complex_json(Complex z) { return {{"re", round12(z.real())}, {"im", round12(z.imag())}}; }

// "kind:1,2" -> ("kind", [1, 2])
std::pair<std::string, json> split_label(const std::string& label) {
    const auto colon = label.find(':');
    json params = json::array();
    if (colon == std::string::npos) return {label, params};
    std::stringstream rest(label.substr(colon + 1));
    for (std::string item; std::getline(rest, item, ',');) params.push_back(std::stoll(item));
    return {label.substr(0, colon), params};
}

std::string params_text(const json& params) {
    std::string s;
    for (const auto& v : params) s += (s.empty() ? "" : " ") + std::to_string(v.get<long long>());
    return s;
}

void check_prime(std::uint32_t p) {
    if (p < kMinPrime || p > kMaxPrime || !is_prime(p))
        throw UsageError("p must be a prime between " + std::to_string(kMinPrime) + " and " +
                         std::to_string(kMaxPrime) + ", got " + std::to_string(p));
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// Subcommands ----------------------------------------------------------------

struct Options {
    std::uint32_t p = 0;
    std::int64_t x = 0;
    std::int64_t xmax = 0;
    double c = 1.0;
    std::string rep, matrix, method = "closed", set, format, output, shift, theta;
    bool compare = false;
    bool oracle = false;
};

int char_table_cmd(const Options& o) {
    check_prime(o.p);
    const CharacterTable t = CharacterTable::build(o.p);
    json out;
    out["p"] = o.p;
    json irreps = json::array();
    for (std::size_t r = 0; r < t.size(); ++r) {
        auto [kind, params] = split_label(to_string(t.irrep(r)));
        irreps.push_back({{"kind", kind}, {"params", params}, {"dim", t.dim(r)}});
    }
    json classes = json::array();
    for (const ClassInfo& c : t.classes().classes()) {
        auto [kind, params] = split_label(to_string(c.label));
        classes.push_back({{"kind", kind}, {"params", params}, {"size", c.size}});
    }
    json values = json::array();
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t.classes().size(); ++c) {
            const Complex v = t.value(r, c);
            values.push_back({round12(v.real()), round12(v.imag())});
        }
    out["irreps"] = std::move(irreps);
    out["classes"] = std::move(classes);
    out["values"] = std::move(values);
    Output dst(o.output);
    dst.stream() << out.dump() << "\n";
    return 0;
}

int gauss_sum_cmd(const Options& o) {
    check_prime(o.p);
    const ModMat2 a = reduce(parse_matrix_literal(o.matrix), o.p);
    const CharacterTable t = CharacterTable::build(o.p);
    const std::size_t irrep = t.index_of(parse_irrep_label(o.rep, o.p));
    json out;
    const auto start = std::chrono::steady_clock::now();
    if (o.method == "brute") {
        const Complex v = gauss_trace_bruteforce(t, irrep, a);
        out["value"] = complex_json(v);
    } else if (o.method == "closed") {
        const GaussTable gt(t);
        out["value"] = complex_json(gauss_trace_closed(gt, irrep, a));
    } else if (o.method == "cells") {
        const CellTraces cells = gauss_trace_cells(t, irrep, a);
        out["value"] = complex_json(cells.total());
        out["cells"] = {{"pu", complex_json(cells.g1)}, {"wp", complex_json(cells.g2)}};
    } else {
        throw UsageError("unknown method '" + o.method + "'");
    }
    out["method"] = o.method;
    out["elapsed_ms"] = round12(elapsed_ms(start));
    Output dst(o.output);
    dst.stream() << out.dump() << "\n";
    return 0;
}

int pv_scan_cmd(const Options& o) {
    check_prime(o.p);
    if (o.xmax < 1) throw UsageError("--xmax must be at least 1");
    if (o.c <= 0) throw UsageError("--c must be positive");
    const CharacterTable t = CharacterTable::build(o.p);
    const GaussTable gt(t);
    PvScanOptions opts;
    opts.c = o.c;
    if (!o.shift.empty()) opts.shift = parse_matrix_literal(o.shift);
    std::vector<std::int64_t> xs;
    for (std::int64_t x = 1; x <= o.xmax; ++x) xs.push_back(x);
    const PvScanReport rep = pv_scan(gt, xs, opts);

    Output dst(o.output);
    std::ostream& os = dst.stream();
    if (o.format == "json") {
        json rows = json::array();
        for (const PvRow& row : rep.rows) {
            auto [kind, params] = split_label(to_string(t.irrep(row.irrep)));
            rows.push_back({{"irrep_kind", kind},
                            {"irrep_params", params},
                            {"dim", t.dim(row.irrep)},
                            {"x", row.x},
                            {"abs_sum", round12(row.abs_sum)},
                            {"ratio", ratio12(row.abs_sum, row.ratio)}});
        }
        json out{{"p", o.p},
                 {"bound", round12(rep.bound)},
                 {"asserted", rep.asserted},
                 {"max_ratio", sig12(rep.max_ratio)},
                 {"rows", rows}};
        os << out.dump() << "\n";
    } else {
        os << "p,irrep_kind,irrep_params,dim,x,abs_sum,ratio\n";
        for (const PvRow& row : rep.rows) {
            auto [kind, params] = split_label(to_string(t.irrep(row.irrep)));
            os << o.p << ',' << kind << ',' << params_text(params) << ',' << t.dim(row.irrep) << ',' << row.x << ','
               << json(round12(row.abs_sum)).dump() << ',' << json(ratio12(row.abs_sum, row.ratio)).dump() << "\n";
        }
    }
    return 0;
}

json count_json(const CountReport& r) {
    json out{{"p", r.p},
             {"x", r.x},
             {"set_kind", r.set_kind},
             {"exact_count", r.exact_count},
             {"main_term", round12(r.main_term)},
             {"residual", round12(r.residual)},
             {"normalized_residual", ratio12(r.residual, r.normalized_residual)},
             {"method", to_string(r.method)}};
    if (r.enumeration_count) out["enumeration_count"] = *r.enumeration_count;
    return out;
}

void write_count(std::ostream& os, const json& j, const std::string& format) {
    if (format == "csv") {
        std::string head, row;
        for (const auto& [k, v] : j.items()) {
            head += (head.empty() ? "" : ",") + k;
            row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        os << head << "\n" << row << "\n";
    } else {
        os << j.dump() << "\n";
    }
}

int count_cmd(const Options& o) {
    check_prime(o.p);
    if (o.x < 0) throw UsageError("--x must be non-negative");
    const ResidueSet set = parse_residue_set(o.set, o.p);
    const ClassInventory inv = ClassInventory::make(o.p);
    const CountReport rep = count_with_main_term(inv, o.x, set, o.compare);
    Output dst(o.output);
    write_count(dst.stream(), count_json(rep), o.format);
    return 0;
}

int fourier_coeffs_cmd(const Options& o) {
    check_prime(o.p);
    const CharacterTable t = CharacterTable::build(o.p);
    const CoeffSums sums = coeff_sum_report(o.p);
    json coeffs = json::array();
    for (std::size_t r = 0; r < t.size(); ++r) {
        auto [kind, params] = split_label(to_string(t.irrep(r)));
        json row{{"kind", kind}, {"params", params}, {"dim", t.dim(r)},
                 {"coefficient", round12(fourier_coeff(o.p, t.irrep(r)))}};
        if (o.oracle) row["oracle"] = complex_json(fourier_coeff_oracle(t, r));
        coeffs.push_back(std::move(row));
    }
    json out{{"p", o.p},
             {"coefficients", coeffs},
             {"family_sums",
              {{"onedim", round12(sums.onedim)},
               {"steinberg", round12(sums.steinberg)},
               {"cuspidal", round12(sums.cuspidal)},
               {"divisor_bound", sums.divisor_bound}}}};
    Output dst(o.output);
    dst.stream() << out.dump() << "\n";
    return 0;
}

int ps_count_cmd(const Options& o) {
    check_prime(o.p);
    if (o.x < 0) throw UsageError("--x must be non-negative");
    const auto ctx = FieldContext::make(o.p);
    json out{{"p", o.p}, {"x", o.x}};
    std::optional<std::pair<std::uint32_t, std::uint32_t>> theta;
    if (!o.theta.empty()) {
        const auto [kind, params] = split_label("theta:" + o.theta);
        if (params.size() != 2) throw UsageError("--theta takes 'x,y' for x + y tau'");
        theta = {std::uint32_t(floor_mod(params[0].get<long long>(), o.p)),
                 std::uint32_t(floor_mod(params[1].get<long long>(), o.p))};
        const CountReport rep = ps_shifted_generator_count(*ctx, theta->first, theta->second, o.x);
        out["theta"] = {theta->first, theta->second};
        out["count"] = count_json(rep);
    }
    const PsScanReport scan = ps_char_sum_scan(*ctx, o.x, theta);
    out["char_sum"] = {{"max_abs", round12(scan.max_abs)},
                       {"theta", {scan.theta_x, scan.theta_y}},
                       {"character", scan.character},
                       {"length", scan.length},
                       {"bound", round12(scan.bound)}};
    Output dst(o.output);
    dst.stream() << out.dump() << "\n";
    return 0;
}

int verify_cmd(const Options& o) {
    check_prime(o.p);
    const auto results = verify_prime(o.p);
    Output dst(o.output);
    std::ostream& os = dst.stream();
    bool ok = true;
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& r : results) {
            ok = ok && r.passed;
            rows.push_back({{"criterion", r.criterion},
                            {"title", r.title},
                            {"status", r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL"},
                            {"summary", r.summary},
                            {"failures", r.failures}});
        }
        os << json{{"p", o.p}, {"passed", ok}, {"criteria", rows}}.dump() << "\n";
    } else {
        for (const auto& r : results) {
            ok = ok && r.passed;
            os << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.title << ": "
               << r.summary << "\n";
            for (const auto& f : r.failures) os << "    " << f << "\n";
        }
    }
    if (!ok) throw CheckFailed("verification failed at p=" + std::to_string(o.p));
    return 0;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Character sums over 2x2 matrix boxes modulo p"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned workers = 1;
    app.add_option("--workers", workers, "worker threads (GL2_WORKERS overrides)")->check(CLI::PositiveNumber);

    Options o;
    auto add_p = [&](CLI::App* sub) { sub->add_option("--p", o.p, "prime modulus")->required(); };
    auto add_output = [&](CLI::App* sub) { sub->add_option("--output", o.output, "write to a file instead of stdout"); };

    auto* ct = app.add_subcommand("char-table", "character table as JSON");
    add_p(ct);
    add_output(ct);

    auto* gs = app.add_subcommand("gauss-sum", "trace of a matrix Gauss sum");
    add_p(gs);
    gs->add_option("--rep", o.rep, "trivial, st, onedim:k, principal:k,l, steinberg:k, cuspidal:k")->required();
    gs->add_option("--matrix", o.matrix, "matrix literal a,b;c,d")->required();
    gs->add_option("--method", o.method, "brute, closed or cells");
    add_output(gs);

    auto* pv = app.add_subcommand("pv-scan", "box character sums against the PV constant");
    add_p(pv);
    pv->add_option("--xmax", o.xmax, "largest box radius")->required();
    pv->add_option("--c", o.c, "length budget c for shifted boxes");
    pv->add_option("--shift", o.shift, "shift matrix a,b;c,d");
    pv->add_option("--out", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_output(pv);

    auto* cnt = app.add_subcommand("count", "matrices of bounded height reducing into a set");
    add_p(cnt);
    cnt->add_option("--x", o.x, "height bound")->required();
    cnt->add_option("--set", o.set, "nonsingular, elliptic, primitive, disc-zero or class:<label>")->required();
    cnt->add_flag("--compare", o.compare, "cross-check by enumeration");
    cnt->add_option("--out", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    add_output(cnt);

    auto* fc = app.add_subcommand("fourier-coeffs", "Fourier coefficients of the primitive indicator");
    add_p(fc);
    fc->add_flag("--oracle", o.oracle, "include the class-sum oracle");
    add_output(fc);

    auto* ps = app.add_subcommand("ps-count", "shifted generators theta + m of F_{p^2}");
    add_p(ps);
    ps->add_option("--x", o.x, "largest shift m")->required();
    ps->add_option("--theta", o.theta, "theta = x + y tau' as 'x,y' (default: scan all)");
    add_output(ps);

    auto* vf = app.add_subcommand("verify", "acceptance suite at one prime");
    add_p(vf);
    vf->add_option("--out", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    add_output(vf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    set_default_workers(workers);

    try {
        if (*ct) return char_table_cmd(o);
        if (*gs) return gauss_sum_cmd(o);
        if (*pv) return pv_scan_cmd(o);
        if (*cnt) return count_cmd(o);
        if (*fc) return fourier_coeffs_cmd(o);
        if (*ps) return ps_count_cmd(o);
        if (*vf) return verify_cmd(o);
    } catch (const BoundViolation& e) {
        std::cerr << "bound violated [" << e.anchor() << "]: " << e.what() << "\n";
        return 1;
    } catch (const CheckFailed& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace gl2::cli
