// Command-line front end: scenario sweeps, figure data generation and
// truncation checks, with CSV/JSON output.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qswap/experiments.hpp"
#include "qswap/io.hpp"

namespace fs = std::filesystem;
using namespace qswap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitContract = 2;

struct RunConfig {
    std::string scenario;
    std::string model = "rabi";
    int n_fock = 10;
    double grid_start = 0.0;
    double grid_stop = 100.0;
    double grid_step = 0.05;
    std::optional<double> omega2;
    double eps_bsm = kDefaultBsmEpsilon;
    std::string output = "sweep.csv";
    std::string format = "csv";
};

// Flat "key = value" lines, '#' comments. Flags given on the command
// line win over file values.
void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw InvalidParameter("config line " + std::to_string(lineno) +
                                   ": expected key = value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "scenario") cfg.scenario = value;
        else if (key == "model") cfg.model = value;
        else if (key == "n_fock") cfg.n_fock = std::stoi(value);
        else if (key == "grid_start") cfg.grid_start = std::stod(value);
        else if (key == "grid_stop") cfg.grid_stop = std::stod(value);
        else if (key == "grid_step") cfg.grid_step = std::stod(value);
        else if (key == "omega2") cfg.omega2 = std::stod(value);
        else if (key == "eps_bsm") cfg.eps_bsm = std::stod(value);
        else if (key == "output") cfg.output = value;
        else if (key == "format") cfg.format = value;
        else
            throw InvalidParameter("config line " + std::to_string(lineno) +
                                   ": unknown key '" + key + "'");
    }
}

Scenario scenario_from_config(const RunConfig& cfg) {
    if (cfg.scenario.empty())
        throw InvalidParameter("no scenario given (use --scenario)");
    Scenario s = build_scenario(cfg.scenario);
    s.set_model(model_from_string(cfg.model));
    s.params1.n_fock = cfg.n_fock;
    s.params2.n_fock = cfg.n_fock;
    s.grid = {cfg.grid_start, cfg.grid_stop, cfg.grid_step};
    s.eps_bsm = cfg.eps_bsm;
    if (cfg.omega2) s.set_detuning(*cfg.omega2);
    s.params1.validate();
    s.params2.validate();
    return s;
}

// Content is assembled in memory first so a failed run leaves no
// partial file behind.
void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

int cmd_run(const RunConfig& cfg) {
    Scenario s = scenario_from_config(cfg);
    SweepSeries series = sweep(s);
    if (cfg.format == "csv")
        write_file(cfg.output, to_csv(series));
    else if (cfg.format == "json")
        write_file(cfg.output, to_json(series));
    else
        throw InvalidParameter("unknown output format '" + cfg.format + "'");
    std::cout << "wrote " << cfg.output << " (" << series.points.size()
              << " points)\n";
    return kExitOk;
}

struct Curve {
    std::string name;
    Scenario scenario;
};

std::vector<Curve> figure_curves(int figure) {
    std::vector<Curve> curves;
    auto with = [](const std::string& label, Model m, double omega2,
                   TimeGrid grid) {
        Scenario s = build_scenario(label);
        s.set_model(m);
        s.set_detuning(omega2);
        s.grid = grid;
        return s;
    };
    const TimeGrid short_grid{0.0, 100.0, 0.05};
    const TimeGrid mid_grid{0.0, 200.0, 0.05};
    const TimeGrid long_grid{0.0, 400.0, 0.05};
    switch (figure) {
        case 1:
            curves.push_back({"fig1_A_e0g1", with("e0g1", Model::rabi, 1.0, short_grid)});
            curves.push_back({"fig1_B_e01g01", with("e01g01", Model::rabi, 1.0, short_grid)});
            curves.push_back({"fig1_C_e0123g0123", with("e0123g0123", Model::rabi, 1.0, short_grid)});
            break;
        case 2:
            curves.push_back({"fig2_top_A_jc", with("e0g1", Model::jc, 1.0, short_grid)});
            curves.push_back({"fig2_top_B_rabi", with("e0g1", Model::rabi, 1.0, short_grid)});
            curves.push_back({"fig2_bottom_A_jc", with("e0e0", Model::jc, 1.0, short_grid)});
            curves.push_back({"fig2_bottom_B_rabi", with("e0e0", Model::rabi, 1.0, short_grid)});
            break;
        case 3:
            curves.push_back({"fig3_A_e0e0", with("e0e0", Model::rabi, 0.95, mid_grid)});
            curves.push_back({"fig3_B_e01e01", with("e01e01", Model::rabi, 0.95, mid_grid)});
            curves.push_back({"fig3_C_e0123e0123", with("e0123e0123", Model::rabi, 0.95, mid_grid)});
            break;
        case 4:
            curves.push_back({"fig4_e0g1", with("e0g1", Model::rabi, 0.8, long_grid)});
            break;
        case 5:
            curves.push_back({"fig5_e0e0", with("e0e0", Model::rabi, 0.8, long_grid)});
            break;
        default:
            throw InvalidParameter("unknown figure id " +
                                   std::to_string(figure) + " (expected 1-5)");
    }
    return curves;
}

int cmd_figures(int figure, const std::string& outdir) {
    const auto curves = figure_curves(figure);
    std::ostringstream script;
    script << "# gnuplot script for figure " << figure << "\n"
           << "set xlabel \"t'\"\nset ylabel \"concurrence\"\n"
           << "set yrange [0:1.05]\nset datafile separator ','\n"
           << "plot ";
    bool first = true;
    for (const auto& curve : curves) {
        SweepSeries series = sweep(curve.scenario);
        const fs::path csv = fs::path(outdir) / (curve.name + ".csv");
        write_file(csv, to_csv(series));
        std::cout << "wrote " << csv.string() << "\n";
        if (!first) script << ", \\\n     ";
        script << "'" << curve.name << ".csv' using 1:2 with lines title '"
               << curve.name << "'";
        first = false;
    }
    script << "\npause -1\n";
    const fs::path plot = fs::path(outdir) /
                          ("fig" + std::to_string(figure) + ".gnuplot");
    write_file(plot, script.str());
    std::cout << "wrote " << plot.string() << "\n";
    return kExitOk;
}

int cmd_check_truncation(const RunConfig& cfg) {
    Scenario s = scenario_from_config(cfg);
    const double t_max = s.grid.stop;
    bool all_pass = true;
    const LeakageReport r1 =
        truncation_check(s.params1, s.initial_state_1(), t_max, 2);
    const LeakageReport r2 =
        truncation_check(s.params2, s.initial_state_2(), t_max, 2);
    for (const auto* r : {&r1, &r2}) {
        std::cout << "max leakage " << r->max_leakage << ", min fidelity "
                  << r->min_fidelity << " -> "
                  << (r->pass ? "pass" : "FAIL (threshold 0.01)") << "\n";
        all_pass = all_pass && r->pass;
    }
    return all_pass ? kExitOk : kExitContract;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement swapping between two qubit-cavity systems"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value config file");
        sub->add_option("--scenario", cfg.scenario,
                        "e0g1, e01g01, e0123g0123, e0e0, e01e01, e0123e0123");
        sub->add_option("--model", cfg.model, "rabi or jc");
        sub->add_option("--n-fock", cfg.n_fock, "retained Fock levels");
        sub->add_option("--grid-start", cfg.grid_start, "sweep start t'");
        sub->add_option("--grid-stop", cfg.grid_stop, "sweep stop t'");
        sub->add_option("--grid-step", cfg.grid_step, "sweep step");
        sub->add_option("--omega2", cfg.omega2,
                        "set omega_2 = Omega_2 (detuning)");
        sub->add_option("--eps-bsm", cfg.eps_bsm,
                        "success-probability floor for defined concurrence");
    };

    auto* run = app.add_subcommand("run", "sweep one scenario and write a series");
    add_common(run);
    run->add_option("--output,-o", cfg.output, "output file");
    run->add_option("--format", cfg.format, "csv or json");

    int figure_id = 0;
    std::string outdir = ".";
    auto* figures =
        app.add_subcommand("figures", "emit data and a plot script for one figure");
    figures->add_option("id", figure_id, "figure id (1-5)")->required();
    figures->add_option("--outdir", outdir, "output directory");

    auto* check = app.add_subcommand("check-truncation",
                                     "factor-2 truncation adequacy check");
    add_common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!config_path.empty()) {
            // File first, then re-apply flags so they win.
            RunConfig file_cfg;
            load_config_file(config_path, file_cfg);
            RunConfig merged = file_cfg;
            for (CLI::App* sub : {run, check}) {
                if (!sub->parsed()) continue;
                if (sub->count("--scenario")) merged.scenario = cfg.scenario;
                if (sub->count("--model")) merged.model = cfg.model;
                if (sub->count("--n-fock")) merged.n_fock = cfg.n_fock;
                if (sub->count("--grid-start")) merged.grid_start = cfg.grid_start;
                if (sub->count("--grid-stop")) merged.grid_stop = cfg.grid_stop;
                if (sub->count("--grid-step")) merged.grid_step = cfg.grid_step;
                if (sub->count("--omega2")) merged.omega2 = cfg.omega2;
                if (sub->count("--eps-bsm")) merged.eps_bsm = cfg.eps_bsm;
                if (sub == run && sub->count("--output")) merged.output = cfg.output;
                if (sub == run && sub->count("--format")) merged.format = cfg.format;
            }
            cfg = merged;
        }

        if (run->parsed()) return cmd_run(cfg);
        if (figures->parsed()) return cmd_figures(figure_id, outdir);
        if (check->parsed()) return cmd_check_truncation(cfg);
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ContractViolation& e) {
        std::cerr << "numerical contract violation: " << e.what() << "\n";
        return kExitContract;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
