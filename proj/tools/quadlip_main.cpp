#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "quadlip/analysis.hpp"
#include "quadlip/errors.hpp"
#include "quadlip/io/config.hpp"
#include "quadlip/io/csv.hpp"
#include "quadlip/io/svg_plot.hpp"
#include "quadlip/stride.hpp"
#include "quadlip/trajectory.hpp"

namespace {

// Exit codes: 0 success (and feasibility pass for `check`), 1 usage error,
// 2 invalid configuration or out-of-range argument, 3 infeasible gait or
// failed check, 4 I/O error.
enum ExitCode { kOk = 0, kUsage = 1, kConfig = 2, kInfeasible = 3, kIo = 4 };

struct Args {
    std::string config_path;
    std::string out_dir = ".";
    std::string swing_profile;
    double velocity = 0.0;
    int steps = 0;
    double dt = 0.0;
    bool permissive = false;
    std::vector<std::string> plots;

    CLI::Option* o_velocity = nullptr;
    CLI::Option* o_steps = nullptr;
    CLI::Option* o_dt = nullptr;
};

void add_config_flags(CLI::App* cmd, Args& a) {
    cmd->add_option("--config", a.config_path, "key-value config file");
    a.o_velocity = cmd->add_option("--velocity", a.velocity, "walking velocity v_w [m/s]");
}

void add_out_flag(CLI::App* cmd, Args& a) {
    cmd->add_option("--out", a.out_dir, "output directory (default .)");
}

void add_steps_flags(CLI::App* cmd, Args& a) {
    a.o_steps = cmd->add_option("--steps", a.steps, "number of steps per biped");
    cmd->add_flag("--permissive", a.permissive,
                  "accept speeds below 1/pi m/s by clamping the lateral amplitude");
}

void add_plot_flag(CLI::App* cmd, Args& a) {
    cmd->add_option("--plot", a.plots, "comma-separated plot kinds to emit as SVG")
        ->delimiter(',');
}

// Command-line flags override values loaded from --config.
quadlip::io::RunConfig resolve_config(const Args& a) {
    quadlip::io::RunConfig rc;
    if (!a.config_path.empty()) rc = quadlip::io::load_config(a.config_path);
    if (a.o_velocity && a.o_velocity->count() > 0) rc.velocity = a.velocity;
    if (a.o_steps && a.o_steps->count() > 0) rc.n_steps = a.steps;
    if (a.o_dt && a.o_dt->count() > 0) rc.dt = a.dt;
    if (a.permissive) rc.permissive = true;
    if (!a.swing_profile.empty()) {
        if (a.swing_profile == "sine") rc.swing_profile = quadlip::SwingProfile::Sine;
        else if (a.swing_profile == "cosine") rc.swing_profile = quadlip::SwingProfile::Cosine;
        else throw CLI::ValidationError("--swing-profile must be 'sine' or 'cosine'");
    }
    return rc;
}

std::string out_path(const Args& a, const std::string& name) {
    std::filesystem::create_directories(a.out_dir);
    return (std::filesystem::path(a.out_dir) / name).string();
}

// Resolves --plot names before any file is written; wrong names or kinds that
// belong to the other subcommand are usage errors.
std::vector<quadlip::io::PlotKind> parse_plots(const std::vector<std::string>& names,
                                               bool trajectory_context) {
    std::vector<quadlip::io::PlotKind> kinds;
    for (const auto& name : names) {
        quadlip::io::PlotKind kind;
        try {
            kind = quadlip::io::parse_plot_kind(name);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError(e.what());
        }
        if (quadlip::io::plot_wants_samples(kind) != trajectory_context)
            throw CLI::ValidationError("plot kind '" + name + "' belongs to the " +
                                       (trajectory_context ? "sweep" : "gen") + " command");
        kinds.push_back(kind);
    }
    return kinds;
}

int run_gen(const Args& a) {
    const auto rc = resolve_config(a);
    const auto kinds = parse_plots(a.plots, true);
    const quadlip::GenerateOptions opt{rc.swing_profile, rc.permissive};
    const auto sp = quadlip::stride_parameters(rc.velocity, rc.morphology, rc.permissive);
    const auto samples =
        quadlip::generate(rc.morphology, rc.phases, rc.velocity, rc.n_steps, rc.dt, opt);

    const std::string csv = out_path(a, "samples.csv");
    quadlip::io::export_samples(samples, csv);
    std::printf("wrote %s (%zu samples, v=%g m/s, %d steps, d_SL=%.4f m, omega_S=%.4f steps/s)\n",
                csv.c_str(), samples.size(), rc.velocity, rc.n_steps, sp.step_length, sp.cadence);
    if (sp.lateral_clamped)
        std::printf("note: below-minimum speed, lateral amplitude clamped to d_SW/2\n");

    for (const auto kind : kinds) {
        const std::string svg =
            out_path(a, std::string(quadlip::io::plot_kind_name(kind)) + ".svg");
        quadlip::io::write_plot(samples, kind, svg);
        std::printf("wrote %s\n", svg.c_str());
    }
    return kOk;
}

int run_sweep(const Args& a, double v_min, double v_max, int points) {
    const auto rc = resolve_config(a);
    const auto kinds = parse_plots(a.plots, false);
    const auto range = quadlip::speed_range(rc.morphology);
    if (v_min <= 0.0) v_min = range.min;
    if (v_max <= 0.0) v_max = range.max;
    if (points < 2) throw CLI::ValidationError("--points must be >= 2");
    if (!(v_min < v_max)) throw CLI::ValidationError("--v-min must be below --v-max");

    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] =
            v_min + (v_max - v_min) * double(i) / double(points - 1);
    const auto rows = quadlip::sweep(rc.morphology, grid);

    const std::string csv = out_path(a, "sweep.csv");
    quadlip::io::export_sweep(rows, csv);
    std::size_t feasible = 0;
    for (const auto& r : rows) feasible += r.feasible ? 1 : 0;
    std::printf("wrote %s (%zu rows, %zu feasible, v in [%.4f, %.4f] m/s)\n", csv.c_str(),
                rows.size(), feasible, v_min, v_max);

    for (const auto kind : kinds) {
        const std::string svg =
            out_path(a, std::string(quadlip::io::plot_kind_name(kind)) + ".svg");
        quadlip::io::write_plot(rows, kind, svg);
        std::printf("wrote %s\n", svg.c_str());
    }
    return kOk;
}

int run_check(const Args& a) {
    const auto rc = resolve_config(a);
    const auto rep = quadlip::feasibility_check(rc.velocity, rc.morphology);
    std::fputs(quadlip::io::format_report(rep).c_str(), stdout);
    return rep.overall ? kOk : kInfeasible;
}

int run_events(const Args& a) {
    const auto rc = resolve_config(a);
    const quadlip::GenerateOptions opt{rc.swing_profile, rc.permissive};
    const auto ev = quadlip::events(rc.morphology, rc.phases, rc.velocity, rc.n_steps, opt);
    const std::string csv = out_path(a, "events.csv");
    quadlip::io::export_events(ev, csv);
    std::printf("wrote %s (%zu events, %d steps)\n", csv.c_str(), ev.size(), rc.n_steps);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadlip: quadruped gait synthesis from two coupled "
                 "linear-inverted-pendulum bipeds"};
    app.require_subcommand(1);

    Args gen_args, sweep_args, check_args, events_args;
    double v_min = -1.0, v_max = -1.0;
    int points = 60;

    auto* gen = app.add_subcommand("gen", "generate a sampled gait trajectory (CSV + plots)");
    add_config_flags(gen, gen_args);
    add_out_flag(gen, gen_args);
    add_steps_flags(gen, gen_args);
    gen_args.o_dt =
        gen->add_option("--dt", gen_args.dt, "sample spacing [s], below one step period");
    gen->add_option("--swing-profile", gen_args.swing_profile, "sine (default) or cosine");
    add_plot_flag(gen, gen_args);

    auto* swp = app.add_subcommand("sweep", "tabulate gait parameters across a velocity grid");
    add_config_flags(swp, sweep_args);
    add_out_flag(swp, sweep_args);
    swp->add_option("--v-min", v_min, "grid start [m/s] (default: minimum admissible speed)");
    swp->add_option("--v-max", v_max, "grid end [m/s] (default: top admissible speed)");
    swp->add_option("--points", points, "grid size (default 60)");
    add_plot_flag(swp, sweep_args);

    auto* chk = app.add_subcommand("check", "kinematic feasibility report for one velocity");
    add_config_flags(chk, check_args);

    auto* evs = app.add_subcommand("events", "lift-off / touchdown schedule as CSV");
    add_config_flags(evs, events_args);
    add_out_flag(evs, events_args);
    add_steps_flags(evs, events_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (swp->parsed()) return run_sweep(sweep_args, v_min, v_max, points);
        if (chk->parsed()) return run_check(check_args);
        return run_events(events_args);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const quadlip::infeasibility_error& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return kInfeasible;
    } catch (const quadlip::singular_geometry_error& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return kInfeasible;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kConfig;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kIo;
    }
}
