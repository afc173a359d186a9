// ptbath: PT-symmetric thermal reservoir simulations at desk scale.
//
// Subcommands: thermalize (heat/coherence/entropy-production trajectories),
// collide (collisional model vs closed form), otto (quantum Otto cycle
// epsilon sweep), figures (one-shot default plots). CSV is the contract;
// SVG plots are a convenience.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ptbath/collision.hpp"
#include "ptbath/format.hpp"
#include "ptbath/otto.hpp"
#include "ptbath/svg_plot.hpp"
#include "ptbath/thermalization.hpp"

namespace fs = std::filesystem;
using namespace ptbath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadParams = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream ofs(path, std::ios::binary);
    if (!ofs) throw IoError("cannot open " + path.string() + " for writing");
    ofs << content;
    ofs.flush();
    if (!ofs) throw IoError("write failed for " + path.string());
}

fs::path prepare_out_dir(const std::string& out) {
    fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create output directory " + dir.string());
    return dir;
}

// Flat "key = value" config support: keys are the long flag names without
// the leading dashes. Values from the file are injected as flags right after
// the subcommand token, so explicit command-line flags take precedence (any
// key also present on the command line is skipped entirely).
std::vector<std::string> expand_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::size_t config_at = 0;
    for (std::size_t i = 1; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config_at = i;
    if (config_at == 0) return args;

    std::ifstream in(args[config_at + 1]);
    if (!in) throw IoError("cannot read config file " + args[config_at + 1]);

    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };

    std::vector<std::string> injected;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected 'key = value': " + line);
        const std::string flag = "--" + trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        bool overridden = false;
        for (const auto& a : args) overridden = overridden || a == flag;
        if (overridden) continue;
        injected.push_back(flag);
        injected.push_back(value);
    }
    // after "prog subcmd", before everything else
    args.insert(args.begin() + 2, injected.begin(), injected.end());
    return args;
}

struct CurveStyle {
    const char* color;
    const char* dash;
};

// Styles follow the paper's figure conventions for the first three curves.
CurveStyle curve_style(std::size_t i) {
    static const CurveStyle styles[] = {
        {"black", ""},        {"red", "7,4"},       {"blue", "9,4,2,4"},
        {"darkgreen", "3,3"}, {"purple", "12,3"},   {"orange", "5,2,1,2"},
    };
    return styles[i % (sizeof styles / sizeof styles[0])];
}

// ---------------------------------------------------------------------------
// thermalize

struct ThermalizeOptions {
    double beta = 0.2;
    double omega = 1.0;
    double gamma = 0.1;
    std::vector<double> epsilons = {0.0, 0.5, 1.0};
    double nbar = 2.0;
    double q0 = 1.0;
    double p0 = 1.0;
    double t_max = 500.0;
    std::size_t points = 201;
    std::string out = ".";
    int precision = 12;
    bool svg = true;
    std::string config_file;
};

int run_thermalize(const ThermalizeOptions& opt) {
    const GaussianState initial =
        displace(thermal_state(ThermalOccupation{opt.nbar}), opt.q0, opt.p0);

    std::vector<ThermalizationTrajectory> runs;
    for (double eps : opt.epsilons) {
        PTReservoirSpec spec(opt.beta, opt.omega, eps, opt.gamma);
        runs.push_back(run_trajectory(initial, spec, opt.t_max, opt.points));
    }

    std::ostringstream csv;
    csv << "t,gamma_t,epsilon,heat,coherence,entropy,entropy_production,energy\n";
    for (std::size_t e = 0; e < opt.epsilons.size(); ++e) {
        const auto& traj = runs[e];
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            const double t = traj.times[i];
            csv << format_sig(t, opt.precision) << ','
                << format_sig(opt.gamma * t, opt.precision) << ','
                << format_sig(opt.epsilons[e], opt.precision) << ','
                << format_sig(traj.heat[i], opt.precision) << ','
                << format_sig(traj.coherence[i], opt.precision) << ','
                << format_sig(traj.entropy[i], opt.precision) << ','
                << format_sig(traj.entropy_production[i], opt.precision) << ','
                << format_sig(mean_energy(traj.states[i], opt.omega), opt.precision)
                << '\n';
        }
    }

    const fs::path dir = prepare_out_dir(opt.out);
    write_file(dir / "thermalize.csv", csv.str());

    if (opt.svg) {
        svg::Panel heat_panel("Heat exchanged", "γt", "Q / ħω");
        svg::Panel coh_panel("Coherence", "γt", "C (nats)");
        svg::Panel ep_panel("Entropy production", "γt", "Σ (nats)");
        for (std::size_t e = 0; e < opt.epsilons.size(); ++e) {
            const auto& traj = runs[e];
            const auto style = curve_style(e);
            const std::string label = "ε = " + format_sig(opt.epsilons[e], 6);
            svg::Series h{label, style.color, style.dash, {}};
            svg::Series c = h, s = h;
            for (std::size_t i = 0; i < traj.times.size(); ++i) {
                const double gt = opt.gamma * traj.times[i];
                h.points.push_back({gt, traj.heat[i]});
                c.points.push_back({gt, traj.coherence[i]});
                s.points.push_back({gt, traj.entropy_production[i]});
            }
            heat_panel.add_series(std::move(h));
            coh_panel.add_series(std::move(c));
            ep_panel.add_series(std::move(s));
        }
        write_file(dir / "fig3.svg",
                   svg::render_document({heat_panel, coh_panel, ep_panel}));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// collide

struct CollideOptions {
    double beta = 0.2;
    double omega = 1.0;
    double gamma = 0.1;
    std::vector<double> epsilons = {0.0, 0.5, 1.0};
    double nbar = 2.0;
    double q0 = 1.0;
    double p0 = 1.0;
    double dt = 1.0;
    double t_max = 100.0;
    std::string out = ".";
    int precision = 12;
    std::string config_file;
};

double max_sigma_error(const GaussianState& a, const GaussianState& b) {
    const Mat2& x = a.sigma();
    const Mat2& y = b.sigma();
    return std::max({std::abs(x.qq - y.qq), std::abs(x.qp - y.qp),
                     std::abs(x.pq - y.pq), std::abs(x.pp - y.pp)});
}

double d_error(const GaussianState& a, const GaussianState& b) {
    return std::hypot(a.d().q - b.d().q, a.d().p - b.d().p);
}

// Largest covariance deviation from the closed form over a whole run.
double naive_rule_error(const GaussianState& initial, const PTReservoirSpec& spec,
                        double dt, std::size_t n_steps) {
    const auto traj = simulate(initial, spec, {dt, n_steps, AngleRule::Naive});
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        worst = std::max(worst, max_sigma_error(traj.states[i],
                                                evolve(initial, spec, traj.times[i])));
    return worst;
}

int run_collide(const CollideOptions& opt) {
    const auto n_steps = static_cast<std::size_t>(std::llround(opt.t_max / opt.dt));
    if (n_steps < 1)
        throw std::invalid_argument("collide: t_max / dt must give at least one step");
    const GaussianState initial =
        displace(thermal_state(ThermalOccupation{opt.nbar}), opt.q0, opt.p0);

    std::ostringstream csv;
    csv << "t,epsilon,max_sigma_err,d_err\n";
    for (double eps : opt.epsilons) {
        PTReservoirSpec spec(opt.beta, opt.omega, eps, opt.gamma);
        const auto traj = simulate(initial, spec, {opt.dt, n_steps, AngleRule::Exact});
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            const GaussianState reference = evolve(initial, spec, traj.times[i]);
            csv << format_sig(traj.times[i], opt.precision) << ','
                << format_sig(eps, opt.precision) << ','
                << format_sig(max_sigma_error(traj.states[i], reference), opt.precision)
                << ',' << format_sig(d_error(traj.states[i], reference), opt.precision)
                << '\n';
        }
    }

    // Empirical order of the naive angle rule from a dt, dt/2, dt/4 refinement
    // at fixed total time (first epsilon value).
    PTReservoirSpec spec(opt.beta, opt.omega, opt.epsilons.front(), opt.gamma);
    const double e1 = naive_rule_error(initial, spec, opt.dt, n_steps);
    const double e2 = naive_rule_error(initial, spec, opt.dt / 2.0, 2 * n_steps);
    const double e4 = naive_rule_error(initial, spec, opt.dt / 4.0, 4 * n_steps);
    const double order = (std::log2(e1 / e2) + std::log2(e2 / e4)) / 2.0;
    csv << "# naive_angle_rule_order = " << format_sig(order, opt.precision) << '\n';

    const fs::path dir = prepare_out_dir(opt.out);
    write_file(dir / "collide.csv", csv.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// otto

struct OttoOptions {
    double omega_i = 1.0;
    double omega_f = 2.0;
    double beta_cold = 4.0;
    double beta_hot = 1.0;
    double eps_min = 0.0;
    double eps_max = 2.0;
    std::size_t eps_steps = 81;
    std::string out = ".";
    int precision = 12;
    bool svg = true;
    std::string config_file;
};

const char* regime_name(CycleRegime r) {
    switch (r) {
        case CycleRegime::Engine:
            return "Engine";
        case CycleRegime::Refrigerator:
            return "Refrigerator";
        case CycleRegime::Other:
            break;
    }
    return "Other";
}

int run_otto(const OttoOptions& opt) {
    if (opt.eps_steps < 1 || !(opt.eps_max >= opt.eps_min) || !(opt.eps_min >= 0.0))
        throw std::invalid_argument("otto: invalid epsilon grid");

    OttoCycleSpec base(opt.omega_i, opt.omega_f, opt.beta_cold, opt.beta_hot,
                       opt.eps_min);
    std::vector<double> grid;
    for (std::size_t i = 0; i < opt.eps_steps; ++i)
        grid.push_back(opt.eps_steps == 1
                           ? opt.eps_min
                           : opt.eps_min + (opt.eps_max - opt.eps_min) *
                                               static_cast<double>(i) /
                                               static_cast<double>(opt.eps_steps - 1));
    const auto results = sweep_epsilon(base, grid);
    const auto eps_c = critical_epsilon(base);

    std::ostringstream csv;
    csv << "epsilon,w_net,q2,q4,regime,figure_of_merit,epsilon_c\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& r = results[i];
        csv << format_sig(grid[i], opt.precision) << ','
            << format_sig(r.w_net, opt.precision) << ','
            << format_sig(r.q2, opt.precision) << ','
            << format_sig(r.q4, opt.precision) << ',' << regime_name(r.regime) << ',';
        if (r.figure_of_merit) csv << format_sig(*r.figure_of_merit, opt.precision);
        csv << ',';
        if (eps_c) csv << format_sig(*eps_c, opt.precision);
        csv << '\n';
    }

    const fs::path dir = prepare_out_dir(opt.out);
    write_file(dir / "otto.csv", csv.str());

    if (opt.svg) {
        svg::Panel panel("Quantum Otto cycle", "ε", "energy / ħω_i");
        svg::Series wnet{"W_net", "darkgreen", "", {}};
        svg::Series q2{"Q2", "red", "7,4", {}};
        svg::Series q4{"Q4", "blue", "9,4,2,4", {}};
        for (std::size_t i = 0; i < grid.size(); ++i) {
            wnet.points.push_back({grid[i], results[i].w_net});
            q2.points.push_back({grid[i], results[i].q2});
            q4.points.push_back({grid[i], results[i].q4});
        }
        panel.add_series(std::move(wnet));
        panel.add_series(std::move(q2));
        panel.add_series(std::move(q4));
        if (eps_c) panel.add_vline(*eps_c, "gray", "ε_c");
        write_file(dir / "fig5.svg", svg::render_document({panel}));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

void add_thermalize_flags(CLI::App* cmd, ThermalizeOptions& opt) {
    cmd->add_option("--beta", opt.beta, "Reservoir inverse temperature");
    cmd->add_option("--omega", opt.omega, "Mode frequency");
    cmd->add_option("--gamma", opt.gamma, "Decay rate");
    cmd->add_option("--epsilon", opt.epsilons, "PT parameter (repeatable)");
    cmd->add_option("--nbar", opt.nbar, "Initial thermal occupation");
    cmd->add_option("--q0", opt.q0, "Initial displacement, q");
    cmd->add_option("--p0", opt.p0, "Initial displacement, p");
    cmd->add_option("--t-max", opt.t_max, "Final time");
    cmd->add_option("--points", opt.points, "Grid points (>= 2)");
    cmd->add_option("--out", opt.out, "Output directory");
    cmd->add_option("--precision", opt.precision, "CSV significant digits")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--svg,!--no-svg", opt.svg, "Emit SVG plots");
    cmd->add_option("--config", opt.config_file, "Flat key = value config file");
}

int dispatch(int argc, char** argv) {
    CLI::App app{"PT-symmetric thermal reservoir simulations"};
    app.require_subcommand(1);

    ThermalizeOptions therm;
    auto* therm_cmd =
        app.add_subcommand("thermalize", "Thermalization trajectories vs epsilon");
    add_thermalize_flags(therm_cmd, therm);

    CollideOptions coll;
    auto* coll_cmd =
        app.add_subcommand("collide", "Collisional model vs closed-form dynamics");
    coll_cmd->add_option("--beta", coll.beta, "Reservoir inverse temperature");
    coll_cmd->add_option("--omega", coll.omega, "Mode frequency");
    coll_cmd->add_option("--gamma", coll.gamma, "Decay rate");
    coll_cmd->add_option("--epsilon", coll.epsilons, "PT parameter (repeatable)");
    coll_cmd->add_option("--nbar", coll.nbar, "Initial thermal occupation");
    coll_cmd->add_option("--q0", coll.q0, "Initial displacement, q");
    coll_cmd->add_option("--p0", coll.p0, "Initial displacement, p");
    coll_cmd->add_option("--dt", coll.dt, "Collision interval");
    coll_cmd->add_option("--t-max", coll.t_max, "Total time");
    coll_cmd->add_option("--out", coll.out, "Output directory");
    coll_cmd->add_option("--precision", coll.precision, "CSV significant digits")
        ->check(CLI::PositiveNumber);
    coll_cmd->add_option("--config", coll.config_file, "Flat key = value config file");

    OttoOptions otto;
    auto* otto_cmd = app.add_subcommand("otto", "Quantum Otto cycle epsilon sweep");
    otto_cmd->add_option("--omega-i", otto.omega_i, "Compressed frequency");
    otto_cmd->add_option("--omega-f", otto.omega_f, "Expanded frequency");
    otto_cmd->add_option("--beta-cold", otto.beta_cold, "Cold inverse temperature");
    otto_cmd->add_option("--beta-hot", otto.beta_hot, "Hot inverse temperature");
    otto_cmd->add_option("--eps-min", otto.eps_min, "Sweep start");
    otto_cmd->add_option("--eps-max", otto.eps_max, "Sweep end");
    otto_cmd->add_option("--eps-steps", otto.eps_steps, "Sweep points");
    otto_cmd->add_option("--out", otto.out, "Output directory");
    otto_cmd->add_option("--precision", otto.precision, "CSV significant digits")
        ->check(CLI::PositiveNumber);
    otto_cmd->add_flag("--svg,!--no-svg", otto.svg, "Emit SVG plots");
    otto_cmd->add_option("--config", otto.config_file, "Flat key = value config file");

    ThermalizeOptions fig_therm;
    OttoOptions fig_otto;
    auto* fig_cmd =
        app.add_subcommand("figures", "Emit fig3.svg and fig5.svg with defaults");
    fig_cmd->add_option("--out", fig_therm.out, "Output directory");
    fig_cmd->add_option("--precision", fig_therm.precision, "CSV significant digits")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> args;
    try {
        const auto full = expand_config_args(argc, argv);
        args.assign(full.rbegin(), full.rend());
        args.pop_back();  // CLI11 takes reversed args without the program name
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    }

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadParams;
    }

    try {
        if (therm_cmd->parsed()) return run_thermalize(therm);
        if (coll_cmd->parsed()) return run_collide(coll);
        if (otto_cmd->parsed()) return run_otto(otto);
        if (fig_cmd->parsed()) {
            fig_otto.out = fig_therm.out;
            fig_otto.precision = fig_therm.precision;
            if (int rc = run_thermalize(fig_therm); rc != kExitOk) return rc;
            return run_otto(fig_otto);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
