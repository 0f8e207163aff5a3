#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "ofb/bounds.hpp"
#include "ofb/errors.hpp"
#include "ofb/extension.hpp"
#include "ofb/minimizer.hpp"
#include "ofb/parallel.hpp"
#include "ofb/strip.hpp"
#include "ofb/threshold.hpp"

namespace ofb::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond)
        throw UsageError(msg);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

void check_geometry(double R, double h) {
    require(std::isfinite(h) && h > 1.0, "--h must exceed 1 (got " + format_double(h) + ")");
    require(std::isfinite(R) && R > h,
            "--R must exceed --h (got R=" + format_double(R) + ", h=" + format_double(h) + ")");
}

/// Output sink: a file if a path was given, otherwise nothing.
class CsvSink {
public:
    explicit CsvSink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw UsageError("cannot open output file '" + path + "'");
        }
    }
    [[nodiscard]] std::ostream* stream() { return file_ ? file_.get() : nullptr; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void kv(std::ostream& out, const std::string& key, double v) { out << key << " = " << format_double(v) << '\n'; }
void kv(std::ostream& out, const std::string& key, const std::string& v) { out << key << " = " << v << '\n'; }

struct Context {
    std::string comment;
    std::ostream& out;
    std::ostream& err;
};

// ---- bounds -------------------------------------------------------------

struct BoundsArgs {
    double R = 0, h = 0;
    std::string csv;
};

int cmd_bounds(const BoundsArgs& a, Context& ctx) {
    check_geometry(a.R, a.h);
    const auto r = bounds::bounds_report(ChannelGeometry(a.R, a.h));
    kv(ctx.out, "R", a.R);
    kv(ctx.out, "h", a.h);
    kv(ctx.out, "lower_poincare", r.lower_poincare);
    kv(ctx.out, "lower_faberkrahn", r.lower_faberkrahn);
    kv(ctx.out, "lower", r.lower);
    kv(ctx.out, "upper_X0", r.upper_X0);
    kv(ctx.out, "upper_X1", r.upper_X1 ? format_double(*r.upper_X1) : std::string("n/a (R >= 2h+1)"));
    kv(ctx.out, "kappa", r.kappa);
    kv(ctx.out, "strip_lower", r.strip_lower);
    kv(ctx.out, "strip_upper_X0", r.strip_upper_X0);
    kv(ctx.out, "strip_upper_sep", r.strip_upper_sep);
    CsvSink sink(a.csv);
    if (auto* os = sink.stream()) {
        CsvWriter w(*os, ctx.comment,
                    {"R", "h", "lower_poincare", "lower_faberkrahn", "lower", "upper_X0", "upper_X1", "kappa",
                     "strip_lower", "strip_upper_X0", "strip_upper_sep"});
        w.row({a.R, a.h, r.lower_poincare, r.lower_faberkrahn, r.lower, r.upper_X0, opt_cell(r.upper_X1), r.kappa,
               r.strip_lower, r.strip_upper_X0, r.strip_upper_sep});
    }
    return ok;
}

// ---- strip --------------------------------------------------------------

struct StripArgs {
    std::string csv;
};

int cmd_strip(const StripArgs& a, Context& ctx) {
    const auto& s = strip::separated_quotient();
    const double ratio = s.c_upper / bounds::strip_lower_constant();
    kv(ctx.out, "alpha", s.alpha);
    kv(ctx.out, "h0", s.h0);
    kv(ctx.out, "mu_h0", s.mu_h0);
    kv(ctx.out, "w_l2", s.w_l2);
    kv(ctx.out, "quotient", s.quotient);
    kv(ctx.out, "c_upper", s.c_upper);
    kv(ctx.out, "c_lower", bounds::strip_lower_constant());
    kv(ctx.out, "ratio", ratio);
    kv(ctx.out, "lambda", s.lambda);
    kv(ctx.out, "el_residual_max", s.el_residual_max);
    CsvSink sink(a.csv);
    if (auto* os = sink.stream()) {
        CsvWriter w(*os, ctx.comment,
                    {"alpha", "h0", "mu_h0", "w_l2", "quotient", "c_upper", "c_lower", "ratio", "lambda",
                     "el_residual_max"});
        w.row({s.alpha, s.h0, s.mu_h0, s.w_l2, s.quotient, s.c_upper, bounds::strip_lower_constant(), ratio,
               s.lambda, s.el_residual_max});
    }
    return ok;
}

// ---- extension ----------------------------------------------------------

struct ExtensionArgs {
    double R = 0, h = 0, U = 1;
    bool verify = false;
    std::string csv;
};

constexpr double kNormRelTol = 1e-6;
constexpr double kDivergenceTol = 1e-6;

int cmd_extension(const ExtensionArgs& a, Context& ctx) {
    check_geometry(a.R, a.h);
    require(std::isfinite(a.U) && a.U > 0.0, "--U must be positive");
    const ChannelGeometry g(a.R, a.h);
    const auto f = extension::make_extension(g, a.U);
    kv(ctx.out, "B1", f.B1);
    kv(ctx.out, "B2", f.B2);
    kv(ctx.out, "grad_norm", f.grad_norm());
    kv(ctx.out, "l4_norm", f.l4_norm());

    std::vector<std::string> header{"R", "h", "U", "B1", "B2", "grad_norm", "l4_norm"};
    std::vector<Cell> row{a.R, a.h, a.U, f.B1, f.B2, f.grad_norm(), f.l4_norm()};
    int code = ok;
    if (a.verify) {
        const auto q = extension::quadrature_norms(g);
        const double e1 = std::abs(f.B1 - q.grad_sq.value) / q.grad_sq.value;
        const double e2 = std::abs(f.B2 - q.l4_4.value) / q.l4_4.value;
        const double div = extension::max_divergence(g, a.U, extension::interior_samples(g, 100));
        const bool pass1 = e1 <= kNormRelTol;
        const bool pass2 = e2 <= kNormRelTol;
        const bool pass_div = div <= kDivergenceTol * a.U;
        kv(ctx.out, "quad_grad_sq", q.grad_sq.value);
        kv(ctx.out, "quad_l4_4", q.l4_4.value);
        kv(ctx.out, "B1_rel_err", e1);
        kv(ctx.out, "B2_rel_err", e2);
        kv(ctx.out, "B2_exact", extension::b2_exact(a.R, a.h));
        kv(ctx.out, "max_divergence", div);
        kv(ctx.out, "B1_check", pass1 ? "PASS" : "FAIL");
        kv(ctx.out, "B2_check", pass2 ? "PASS" : "FAIL");
        kv(ctx.out, "divergence_check", pass_div ? "PASS" : "FAIL");
        header.insert(header.end(), {"quad_grad_sq", "quad_l4_4", "B1_rel_err", "B2_rel_err", "max_divergence"});
        row.insert(row.end(), {q.grad_sq.value, q.l4_4.value, e1, e2, div});
        if (!(pass1 && pass2 && pass_div)) {
            ctx.err << "verification failed\n";
            code = verification_failed;
        }
    }
    CsvSink sink(a.csv);
    if (auto* os = sink.stream()) {
        CsvWriter w(*os, ctx.comment, header);
        w.row(row);
    }
    return code;
}

// ---- threshold ----------------------------------------------------------

struct ThresholdArgs {
    double R = 0, h = 0, U = 0, eta = 0;
    std::string csv;
};

int cmd_threshold(const ThresholdArgs& a, Context& ctx) {
    check_geometry(a.R, a.h);
    require(std::isfinite(a.U) && a.U > 0.0, "--U must be positive");
    require(std::isfinite(a.eta) && a.eta > 0.0, "--eta must be positive");
    const auto r = threshold::certify_uniqueness(ChannelGeometry(a.R, a.h), FlowParams(a.U, a.eta));
    kv(ctx.out, "S_R_lower", r.S_R_lower);
    kv(ctx.out, "grad_psi", r.grad_psi);
    kv(ctx.out, "l4_psi", r.l4_psi);
    kv(ctx.out, "lhs", r.lhs_umbral);
    kv(ctx.out, "rhs", r.rhs_umbral);
    kv(ctx.out, "unique_certified", r.unique_certified ? "true" : "false");
    kv(ctx.out, "re_bar", r.re_bar);
    kv(ctx.out, "U_over_eta", a.U / a.eta);
    kv(ctx.out, "grad_u_bound", r.grad_u_bound);
    kv(ctx.out, "eps_h", r.eps_h);
    kv(ctx.out, "note", r.surrogate_note);
    CsvSink sink(a.csv);
    if (auto* os = sink.stream()) {
        CsvWriter w(*os, ctx.comment,
                    {"R", "h", "U", "eta", "S_R_lower", "grad_psi", "l4_psi", "lhs", "rhs", "unique_certified",
                     "re_bar", "grad_u_bound", "eps_h"});
        w.row({a.R, a.h, a.U, a.eta, r.S_R_lower, r.grad_psi, r.l4_psi, r.lhs_umbral, r.rhs_umbral,
               static_cast<long long>(r.unique_certified), r.re_bar, r.grad_u_bound, r.eps_h});
    }
    return ok;
}

// ---- minimize -----------------------------------------------------------

struct MinimizeArgs {
    double R = 0, h = 0, step = 0.05, tol = 1e-9;
    std::string init = "offset_bump";
    std::uint64_t seed = 1;
    int seeds = 1;
    int max_iter = 4000;
    bool even = false;
    unsigned threads = 0;
    std::string csv, field_out;
};

minimizer::InitKind parse_init(const std::string& s) {
    if (s == "even_bump")
        return minimizer::InitKind::even_bump;
    if (s == "offset_bump")
        return minimizer::InitKind::offset_bump;
    if (s == "twin_bump")
        return minimizer::InitKind::twin_bump;
    if (s == "random")
        return minimizer::InitKind::random;
    throw UsageError("--init must be one of even_bump, offset_bump, twin_bump, random (got '" + s + "')");
}

void check_grid(double R, double h, double step) {
    require(std::isfinite(step) && step > 0.0 && step <= 0.125, "--step must lie in (0, 0.125]");
    for (auto [len, name] : {std::pair{R, "--R"}, std::pair{h, "--h"}}) {
        const double n = 2.0 * len / step;
        require(std::abs(n - std::round(n)) <= 1e-9 * std::max(1.0, n),
                std::string("--step must divide 2*") + (name + 2) + " exactly");
    }
}

int cmd_minimize(const MinimizeArgs& a, Context& ctx) {
    check_geometry(a.R, a.h);
    check_grid(a.R, a.h, a.step);
    require(a.tol > 0.0, "--tol must be positive");
    require(a.max_iter >= 1, "--max-iter must be >= 1");
    require(a.seeds >= 1, "--seeds must be >= 1");
    const auto kind = parse_init(a.init);
    require(a.seeds == 1 || kind == minimizer::InitKind::random, "--seeds > 1 requires --init random");

    const ChannelGeometry g(a.R, a.h);
    std::vector<std::optional<minimizer::MinimizeResult>> runs(static_cast<std::size_t>(a.seeds));
    parallel_for(runs.size(), worker_count(a.threads), [&](std::size_t i) {
        const minimizer::InitSpec init{kind, a.seed + i};
        runs[i] = minimizer::minimize(g, a.step, init, a.even, a.max_iter, a.tol);
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i)
        if (runs[i]->S_estimate < runs[best]->S_estimate)
            best = i;

    CsvSink sink(a.csv);
    std::optional<CsvWriter> w;
    if (auto* os = sink.stream())
        w.emplace(*os, ctx.comment,
                  std::vector<std::string>{"R", "h", "step", "init", "even", "S_estimate", "asymmetry", "iterations",
                                           "converged", "residual", "best"});
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto& r = *runs[i];
        const std::string label = minimizer::InitSpec{kind, a.seed + i}.label();
        ctx.out << label << ": S = " << format_double(r.S_estimate) << ", asymmetry = " << format_double(r.asymmetry)
                << ", iterations = " << r.iterations << (r.converged ? "" : " (not converged)")
                << ", residual = " << format_double(r.residual) << (i == best && runs.size() > 1 ? "  [best]" : "")
                << '\n';
        if (w)
            w->row({a.R, a.h, a.step, label, static_cast<long long>(a.even), r.S_estimate, r.asymmetry,
                    static_cast<long long>(r.iterations), static_cast<long long>(r.converged), r.residual,
                    static_cast<long long>(i == best)});
    }
    if (!a.field_out.empty()) {
        CsvSink fs(a.field_out);
        CsvWriter fw(*fs.stream(), ctx.comment, {"x", "y", "v"});
        const auto& f = runs[best]->field;
        for (int j = 0; j < f.ny(); ++j)
            for (int i = 0; i < f.nx(); ++i)
                fw.row({f.x(i), f.y(j), f.values()[f.index(i, j)]});
    }
    return ok;
}

// ---- scan ---------------------------------------------------------------

struct ScanArgs {
    double h = 2.0, step = 0.05, tol = 1e-9;
    std::vector<double> R_list;
    int seeds = 3;
    int max_iter = 4000;
    unsigned threads = 0;
    std::string csv;
};

int cmd_scan(const ScanArgs& a, Context& ctx) {
    require(!a.R_list.empty(), "--R-list must not be empty");
    for (std::size_t i = 0; i < a.R_list.size(); ++i) {
        check_geometry(a.R_list[i], a.h);
        check_grid(a.R_list[i], a.h, a.step);
        require(i == 0 || a.R_list[i] > a.R_list[i - 1], "--R-list must be strictly increasing");
    }
    require(a.seeds >= 3, "--seeds must be >= 3");
    require(a.tol > 0.0, "--tol must be positive");
    minimizer::ScanOptions o;
    o.h = a.h;
    o.R_list = a.R_list;
    o.step = a.step;
    o.tol = a.tol;
    o.seeds = a.seeds;
    o.max_iter = a.max_iter;
    o.threads = a.threads;
    const auto t = minimizer::symmetry_breaking_scan(o);

    CsvSink sink(a.csv);
    std::optional<CsvWriter> w;
    if (auto* os = sink.stream())
        w.emplace(*os, ctx.comment,
                  std::vector<std::string>{"R", "S_even", "S_free", "gap", "asymmetry_free", "asymmetry_even",
                                           "S_even_fine", "S_free_fine", "margin", "best_even_init", "best_init",
                                           "even_converged", "free_converged"});
    ctx.out << "R,S_even,S_free,gap,margin,asymmetry_free,best_init\n";
    for (const auto& r : t.rows) {
        ctx.out << format_double(r.R) << ',' << format_double(r.S_even) << ',' << format_double(r.S_free) << ','
                << format_double(r.gap) << ',' << format_double(r.margin) << ',' << format_double(r.asymmetry_free)
                << ',' << r.best_init << '\n';
        if (w)
            w->row({r.R, r.S_even, r.S_free, r.gap, r.asymmetry_free, r.asymmetry_even, r.S_even_fine,
                    r.S_free_fine, r.margin, r.best_even_init, r.best_init, static_cast<long long>(r.even_converged),
                    static_cast<long long>(r.free_converged)});
    }
    kv(ctx.out, "R0_empirical", t.R0_empirical ? format_double(*t.R0_empirical) : std::string("none in list"));
    return ok;
}

// ---- figure -------------------------------------------------------------

struct FigureArgs {
    std::string name;
    std::string out;
    int points = 200;
    unsigned threads = 0;
};

int cmd_figure(const FigureArgs& a, Context& ctx) {
    require(a.points >= 2, "--points must be >= 2");
    const auto n = static_cast<std::size_t>(a.points);
    std::vector<std::string> header;
    std::function<std::vector<Cell>(std::size_t)> make_row;

    const double h_lo = 1.05;
    const double h_hi = 50.0;
    auto h_at = [&](std::size_t i) {
        return h_lo * std::pow(h_hi / h_lo, static_cast<double>(i) / static_cast<double>(n - 1));
    };
    if (a.name == "logwins") {
        header = {"h", "strip_lower", "strip_upper_X0", "ratio"};
        make_row = [&](std::size_t i) -> std::vector<Cell> {
            const double h = h_at(i);
            const double lo = bounds::strip_lower_constant() / h;
            const double up = bounds::upper_bound_X0(h);
            return {h, lo, up, up / lo};
        };
    } else if (a.name == "jacobi2") {
        header = {"h", "strip_lower", "strip_upper_sep", "ratio"};
        const double c = strip::separated_quotient().c_upper;
        make_row = [&, c](std::size_t i) -> std::vector<Cell> {
            const double h = h_at(i);
            const double lo = bounds::strip_lower_constant() / h;
            return {h, lo, c / h, (c / h) / lo};
        };
    } else if (a.name == "reynolds2") {
        header = {"R", "re_bar"};
        make_row = [&](std::size_t i) -> std::vector<Cell> {
            const double R = 5.0 + 195.0 * static_cast<double>(i + 1) / static_cast<double>(n);
            return {R, threshold::re_bar(ChannelGeometry(R, 5.0))};
        };
    } else {
        throw UsageError("unknown figure '" + a.name + "' (expected logwins, jacobi2 or reynolds2)");
    }

    std::vector<std::vector<Cell>> rows(n);
    parallel_for(n, worker_count(a.threads), [&](std::size_t i) { rows[i] = make_row(i); });

    CsvSink sink(a.out);
    std::ostream& os = sink.stream() ? *sink.stream() : ctx.out;
    CsvWriter w(os, ctx.comment, header);
    for (const auto& r : rows)
        w.row(r);
    return ok;
}

}  // namespace

std::vector<std::string> merge_config(const std::vector<std::string>& args, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config file '" + path + "'");
    std::vector<std::string> extra;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        key.erase(0, key.find_first_not_of('-'));
        if (key.empty())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
        const std::string flag = "--" + key;
        if (has_flag(args, flag) || value == "false")
            continue;
        extra.push_back(flag);
        if (value != "true")
            extra.push_back(value);
    }
    std::vector<std::string> merged = args;
    merged.insert(merged.end(), extra.begin(), extra.end());
    return merged;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds, extensions and discrete minimizers for the pierced-channel Sobolev problem", "ofb"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    std::string config;
    app.add_option("--config", config, "key=value file; command-line flags take precedence");

    BoundsArgs ba;
    auto* sb = app.add_subcommand("bounds", "lower and upper bounds for S_R");
    sb->add_option("--R", ba.R, "half length")->required();
    sb->add_option("--h", ba.h, "half height")->required();
    sb->add_option("--csv", ba.csv, "write a CSV row here");

    StripArgs sa;
    auto* ss = app.add_subcommand("strip", "separated-variable upper bound on the strip");
    ss->add_option("--csv", sa.csv);

    ExtensionArgs ea;
    auto* se = app.add_subcommand("extension", "closed-form norms of the solenoidal extension");
    se->add_option("--R", ea.R)->required();
    se->add_option("--h", ea.h)->required();
    se->add_option("--U", ea.U, "boundary speed")->capture_default_str();
    se->add_flag("--verify", ea.verify, "compare against quadrature, exit 1 on mismatch");
    se->add_option("--csv", ea.csv);

    ThresholdArgs ta;
    auto* st = app.add_subcommand("threshold", "uniqueness certificate");
    st->add_option("--R", ta.R)->required();
    st->add_option("--h", ta.h)->required();
    st->add_option("--U", ta.U)->required();
    st->add_option("--eta", ta.eta, "viscosity")->required();
    st->add_option("--csv", ta.csv);

    MinimizeArgs ma;
    auto* sm = app.add_subcommand("minimize", "discrete minimizer of the Sobolev quotient");
    sm->add_option("--R", ma.R)->required();
    sm->add_option("--h", ma.h)->required();
    sm->add_option("--step", ma.step)->capture_default_str();
    sm->add_option("--init", ma.init, "even_bump | offset_bump | twin_bump | random")->capture_default_str();
    sm->add_option("--seed", ma.seed, "first random seed")->capture_default_str();
    sm->add_option("--seeds", ma.seeds, "number of random seeds")->capture_default_str();
    sm->add_flag("--even", ma.even, "restrict to functions even in x");
    sm->add_option("--tol", ma.tol)->capture_default_str();
    sm->add_option("--max-iter", ma.max_iter)->capture_default_str();
    sm->add_option("--threads", ma.threads);
    sm->add_option("--csv", ma.csv);
    sm->add_option("--field-out", ma.field_out, "write the best field as x,y,v");

    ScanArgs ca;
    auto* sc = app.add_subcommand("scan", "symmetry-breaking scan over R");
    sc->add_option("--h", ca.h)->capture_default_str();
    sc->add_option("--R-list", ca.R_list, "comma separated, increasing")->delimiter(',')->required();
    sc->add_option("--step", ca.step)->capture_default_str();
    sc->add_option("--tol", ca.tol)->capture_default_str();
    sc->add_option("--seeds", ca.seeds)->capture_default_str();
    sc->add_option("--max-iter", ca.max_iter)->capture_default_str();
    sc->add_option("--threads", ca.threads);
    sc->add_option("--csv", ca.csv);

    FigureArgs fa;
    auto* sf = app.add_subcommand("figure", "sweep data: logwins, jacobi2, reynolds2");
    sf->add_option("name", fa.name)->required();
    sf->add_option("--out", fa.out, "CSV path (default stdout)");
    sf->add_option("--points", fa.points)->capture_default_str();
    sf->add_option("--threads", fa.threads);

    std::vector<std::string> args = raw_args;
    try {
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config" && i + 1 < args.size()) {
                const std::string path = args[i + 1];
                args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                           args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                args = merge_config(args, path);
                break;
            }
            if (args[i].rfind("--config=", 0) == 0) {
                const std::string path = args[i].substr(9);
                args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
                args = merge_config(args, path);
                break;
            }
        }
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    std::string comment = std::string("ofb ") + kVersion;
    for (const auto& s : args)
        comment += " " + s;
    Context ctx{comment, out, err};
    try {
        if (*sb)
            return cmd_bounds(ba, ctx);
        if (*ss)
            return cmd_strip(sa, ctx);
        if (*se)
            return cmd_extension(ea, ctx);
        if (*st)
            return cmd_threshold(ta, ctx);
        if (*sm)
            return cmd_minimize(ma, ctx);
        if (*sc)
            return cmd_scan(ca, ctx);
        if (*sf)
            return cmd_figure(fa, ctx);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return verification_failed;
    }
    return usage_error;
}

}  // namespace ofb::cli
