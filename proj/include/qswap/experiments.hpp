#ifndef QSWAP_EXPERIMENTS_HPP
#define QSWAP_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qswap/swap.hpp"

namespace qswap {

struct TimeGrid {
    double start = 0.0;
    double stop = 100.0;
    double step = 0.05;

    std::vector<double> times() const;
};

// One swapping experiment: two subsystems, their initial product states,
// and the t' grid to scan.
struct Scenario {
    std::string label;  // e0g1, e01g01, e0123g0123, e0e0, e01e01,
                        // e0123e0123, or "custom"
    SubsystemParams params1;
    SubsystemParams params2;
    std::array<Complex, 2> qubit_amps1{};
    std::array<Complex, 2> qubit_amps2{};
    std::vector<Complex> photon_amps1;
    std::vector<Complex> photon_amps2;
    TimeGrid grid;
    double eps_bsm = kDefaultBsmEpsilon;

    StateVector initial_state_1() const;
    StateVector initial_state_2() const;

    void set_model(Model m);
    // omega_2 = Omega_2 = value, subsystem 1 untouched.
    void set_detuning(double omega2);
};

const std::vector<std::string>& scenario_labels();

// Scenario with paper defaults: omega_1 = Omega_1 = 1, g = 0.2,
// n_fock = 10, resonance. Throws InvalidParameter on unknown label.
Scenario build_scenario(const std::string& label);

struct SweepPoint {
    double t = 0.0;
    std::optional<double> concurrence;
    double success_prob = 0.0;
};

struct SweepSeries {
    std::vector<SweepPoint> points;
    Scenario scenario;  // metadata snapshot

    double max_concurrence() const;  // over defined points; 0 if none
};

// One point per grid time, in grid order; undefined points are kept
// with an explicit marker so series length equals grid length.
SweepSeries sweep(const Scenario& s);

struct ModelComparison {
    SweepSeries rabi;
    SweepSeries jc;
    double max_abs_diff = 0.0;   // over points defined in both
    double mean_abs_diff = 0.0;
};

ModelComparison compare_models(const Scenario& s);

// One series per omega_2 value over the scenario's grid.
std::vector<SweepSeries> detuning_scan(const Scenario& base,
                                       const std::vector<double>& omega2_list);

}  // namespace qswap

#endif
