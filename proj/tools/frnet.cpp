#include <charconv>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "frnet/config.hpp"
#include "frnet/csv.hpp"
#include "frnet/frequency.hpp"
#include "frnet/solver.hpp"
#include "frnet/time_domain.hpp"

namespace {

using namespace frnet;

// Equation-line rendering: order-zero terms appear as bare coefficients,
// so the ladder k=c=1 case reads `L^2 + (-1)*L + (-1*D^1) = 0`.
std::string compact(const FracPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) out += " + ";
        first = false;
        out += format_g17(t.coeff);
        if (t.exponent != 0.0) out += "*D^" + format_g17(t.exponent);
    }
    return out;
}

std::string equation_line(const QuadraticImplicitOp& eq) {
    std::string out = eq.a2 == 1.0 ? "L^2" : format_g17(eq.a2) + "*L^2";
    out += " + (" + compact(eq.b) + ")*L + (" + compact(eq.c) + ") = 0";
    return out;
}

const char* topology_name(Topology t) {
    switch (t) {
        case Topology::tree:
            return "tree";
        case Topology::multitree:
            return "multitree";
        case Topology::ladder:
            return "ladder";
    }
    return "";
}

void emit(const std::string& out_path,
          const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open output file '" + out_path +
                                    "'");
    }
    writer(file);
}

Termination parse_termination(const std::string& text) {
    if (text == "open") return Termination::open();
    const char* first = text.data();
    const char* last = first + text.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(
            "--termination must be 'open' or a real number, got '" + text +
            "'");
    }
    return Termination::value({value, 0.0});
}

struct Options {
    std::string config_path;
    std::string out_path;
    std::string convention;
    std::string termination = "0";
    double wmin = 0.0;
    double wmax = 0.0;
    double tmax = 0.0;
    double omega = 0.0;
    int points = 0;
    int max_depth = 60;
    bool want_explicit = false;
    bool allow_branch_fail = false;
};

NetworkConfig load(const Options& opt) {
    NetworkConfig cfg = load_config(opt.config_path);
    if (opt.convention == "recursion") {
        cfg.convention = MultitreeConvention::recursion;
    } else if (opt.convention == "paper") {
        cfg.convention = MultitreeConvention::paper;
    }
    return cfg;
}

void run_derive(const Options& opt) {
    const NetworkConfig cfg = load(opt);
    const QuadraticImplicitOp eq = derive_equation(cfg.spec, cfg.convention);
    std::cout << equation_line(eq) << '\n';
    std::cout << "a2 = " << format_g17(eq.a2) << '\n';
    std::cout << "B = " << to_string(eq.b) << '\n';
    std::cout << "C = " << to_string(eq.c) << '\n';
    std::cout << "order " << format_g17(equivalent_order(eq)) << '\n';
    if (opt.want_explicit) {
        const ExplicitResult result = try_explicit(eq);
        std::cout << "classification: " << explicit_kind_tag(result.kind)
                  << '\n';
        for (std::size_t i = 0; i < result.roots.size(); ++i) {
            std::cout << "root[" << i << "]: " << to_string(result.roots[i])
                      << '\n';
        }
    }
}

void run_bode(const Options& opt) {
    const NetworkConfig cfg = load(opt);
    FrequencyResponse fr = bode(derive_equation(cfg.spec, cfg.convention),
                                opt.wmin, opt.wmax, opt.points);
    fr.topology = topology_name(cfg.spec.topology);
    if (!opt.allow_branch_fail) {
        for (const auto& sample : fr.samples) {
            if (!sample.branch_ok) {
                throw BranchFailure(
                    "no passive branch at omega = " +
                    format_g17(sample.omega) +
                    " (use --allow-branch-fail to emit flagged rows)");
            }
        }
    }
    emit(opt.out_path, [&](std::ostream& os) { write_frequency_csv(os, fr); });
}

void run_order(const Options& opt) {
    const NetworkConfig cfg = load(opt);
    const FrequencyResponse fr = bode(
        derive_equation(cfg.spec, cfg.convention), opt.wmin, opt.wmax,
        opt.points);
    const double slope = fit_order(fr, opt.wmin, opt.wmax);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", slope);
    std::cout << buf << '\n';
}

void run_step(const Options& opt) {
    if (!(opt.tmax > 0.0)) {
        throw std::invalid_argument("--tmax must be > 0");
    }
    if (opt.points < 2) {
        throw std::invalid_argument("--points must be >= 2");
    }
    const NetworkConfig cfg = load(opt);
    const QuadraticImplicitOp eq = derive_equation(cfg.spec, cfg.convention);
    const ExplicitResult result = try_explicit(eq);
    TimeSeries ts;
    if (result.kind != ExplicitKind::implicit) {
        const FracPoly& root = result.roots.front();
        const double h = opt.tmax / (opt.points - 1);
        const TimeSeries forcing{h, std::vector<double>(opt.points, 1.0)};
        ts = simulate_explicit(root, forcing);
        std::cerr << "path: explicit (root " << to_string(root) << ")\n";
    } else {
        ts = step_response_implicit(eq, opt.tmax, opt.points);
        std::cerr << "path: ilt\n";
    }
    emit(opt.out_path,
         [&](std::ostream& os) { write_time_series_csv(os, ts); });
}

void run_converge(const Options& opt) {
    if (!(opt.omega > 0.0)) {
        throw std::invalid_argument("--omega must be > 0");
    }
    if (opt.max_depth < 0) {
        throw std::invalid_argument("--max-depth must be >= 0");
    }
    const NetworkConfig cfg = load(opt);
    const QuadraticImplicitOp eq = derive_equation(cfg.spec, cfg.convention);
    const std::complex<double> s{0.0, opt.omega};
    const QuadRoot root = quad_root(eq, s);
    if (!root.branch_ok) {
        throw BranchFailure("no passive branch at omega = " +
                            format_g17(opt.omega));
    }
    const Termination term = parse_termination(opt.termination);
    std::vector<ConvergenceRow> rows;
    rows.reserve(opt.max_depth + 1);
    for (int depth = 0; depth <= opt.max_depth; ++depth) {
        const std::complex<double> z =
            truncated_response(cfg.spec, s, depth, term);
        rows.push_back({depth, std::abs(z - root.value)});
    }
    emit(opt.out_path,
         [&](std::ostream& os) { write_convergence_csv(os, rows); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Implicit-operator toolkit for self-similar networks"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* derive = app.add_subcommand(
        "derive", "Print the implicit quadratic equation for a network");
    derive->add_option("config", opt.config_path, "network config file")
        ->required();
    derive->add_flag("--explicit", opt.want_explicit,
                     "classify and print closed-form roots when they exist");
    derive->add_option("--convention", opt.convention,
                       "multitree coefficient convention")
        ->check(CLI::IsMember({"recursion", "paper"}));

    CLI::App* bode_cmd = app.add_subcommand(
        "bode", "Sweep the passive root over a log-spaced frequency grid");
    bode_cmd->add_option("config", opt.config_path, "network config file")
        ->required();
    bode_cmd->add_option("--wmin", opt.wmin, "lowest angular frequency")
        ->required();
    bode_cmd->add_option("--wmax", opt.wmax, "highest angular frequency")
        ->required();
    bode_cmd->add_option("--points", opt.points, "number of grid points")
        ->required();
    bode_cmd->add_option("--out", opt.out_path, "CSV output path (stdout "
                                                "when omitted)");
    bode_cmd->add_flag("--allow-branch-fail", opt.allow_branch_fail,
                       "emit flagged rows instead of failing");

    CLI::App* order = app.add_subcommand(
        "order", "Fit the apparent operator order over a frequency window");
    order->add_option("config", opt.config_path, "network config file")
        ->required();
    order->add_option("--wmin", opt.wmin, "window lower edge")->required();
    order->add_option("--wmax", opt.wmax, "window upper edge")->required();
    order->add_option("--points", opt.points, "number of grid points")
        ->required();

    CLI::App* step = app.add_subcommand(
        "step", "Unit-step response (GL stepping when a closed-form root "
                "exists, Laplace inversion otherwise)");
    step->add_option("config", opt.config_path, "network config file")
        ->required();
    step->add_option("--tmax", opt.tmax, "end of the time grid")->required();
    step->add_option("--points", opt.points, "number of time samples")
        ->required();
    step->add_option("--out", opt.out_path, "CSV output path (stdout when "
                                            "omitted)");

    CLI::App* converge = app.add_subcommand(
        "converge", "Truncation-depth error sweep against the passive root");
    converge->add_option("config", opt.config_path, "network config file")
        ->required();
    converge->add_option("--omega", opt.omega, "angular frequency")
        ->required();
    converge->add_option("--max-depth", opt.max_depth,
                         "largest truncation depth");
    converge->add_option("--termination", opt.termination,
                         "'open' or a real impedance closing the deepest "
                         "generation");
    converge->add_option("--out", opt.out_path, "CSV output path (stdout "
                                                "when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (derive->parsed()) {
            run_derive(opt);
        } else if (bode_cmd->parsed()) {
            run_bode(opt);
        } else if (order->parsed()) {
            run_order(opt);
        } else if (step->parsed()) {
            run_step(opt);
        } else if (converge->parsed()) {
            run_converge(opt);
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InsufficientSamples& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DerivationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
