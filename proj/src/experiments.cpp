#include "qswap/experiments.hpp"

#include <algorithm>
#include <cmath>

namespace qswap {

std::vector<double> TimeGrid::times() const {
    if (step <= 0) throw InvalidParameter("grid step must be positive");
    if (stop < start) throw InvalidParameter("grid stop before start");
    std::vector<double> ts;
    const int n = static_cast<int>(std::floor((stop - start) / step + 0.5));
    ts.reserve(n + 1);
    for (int i = 0; i <= n; ++i) ts.push_back(start + i * step);
    return ts;
}

StateVector Scenario::initial_state_1() const {
    return make_initial_state(qubit_amps1, photon_amps1, params1.n_fock);
}

StateVector Scenario::initial_state_2() const {
    return make_initial_state(qubit_amps2, photon_amps2, params2.n_fock);
}

void Scenario::set_model(Model m) {
    params1.model = m;
    params2.model = m;
}

void Scenario::set_detuning(double omega2) {
    params2.cavity_freq = omega2;
    params2.qubit_freq = omega2;
}

const std::vector<std::string>& scenario_labels() {
    static const std::vector<std::string> labels = {
        "e0g1", "e01g01", "e0123g0123", "e0e0", "e01e01", "e0123e0123"};
    return labels;
}

namespace {

std::vector<Complex> equal_weights(int levels) {
    return std::vector<Complex>(levels, Complex(1.0, 0.0));
}

}  // namespace

Scenario build_scenario(const std::string& label) {
    Scenario s;
    s.label = label;
    // Paper defaults: omega_k = Omega_k = 1, g_k = 0.2, N = 10.
    s.params1 = SubsystemParams{};
    s.params2 = SubsystemParams{};

    // All amplitudes are normalized by make_initial_state.
    const std::array<Complex, 2> ground = {Complex(1.0), Complex(0.0)};
    const std::array<Complex, 2> excited = {Complex(0.0), Complex(1.0)};

    if (label == "e0g1") {
        s.qubit_amps1 = excited;
        s.photon_amps1 = {1.0};
        s.qubit_amps2 = ground;
        s.photon_amps2 = {0.0, 1.0};
    } else if (label == "e01g01") {
        s.qubit_amps1 = excited;
        s.photon_amps1 = equal_weights(2);
        s.qubit_amps2 = ground;
        s.photon_amps2 = equal_weights(2);
    } else if (label == "e0123g0123") {
        s.qubit_amps1 = excited;
        s.photon_amps1 = equal_weights(4);
        s.qubit_amps2 = ground;
        s.photon_amps2 = equal_weights(4);
    } else if (label == "e0e0") {
        s.qubit_amps1 = excited;
        s.photon_amps1 = {1.0};
        s.qubit_amps2 = excited;
        s.photon_amps2 = {1.0};
    } else if (label == "e01e01") {
        s.qubit_amps1 = excited;
        s.photon_amps1 = equal_weights(2);
        s.qubit_amps2 = excited;
        s.photon_amps2 = equal_weights(2);
    } else if (label == "e0123e0123") {
        s.qubit_amps1 = excited;
        s.photon_amps1 = equal_weights(4);
        s.qubit_amps2 = excited;
        s.photon_amps2 = equal_weights(4);
    } else {
        throw InvalidParameter("unknown scenario label '" + label + "'");
    }
    return s;
}

double SweepSeries::max_concurrence() const {
    double m = 0.0;
    for (const auto& p : points)
        if (p.concurrence) m = std::max(m, *p.concurrence);
    return m;
}

SweepSeries sweep(const Scenario& s) {
    s.params1.validate();
    s.params2.validate();

    const Propagator prop1 = make_propagator(s.params1);
    const Propagator prop2 = make_propagator(s.params2);
    const StateVector psi1 = s.initial_state_1();
    const StateVector psi2 = s.initial_state_2();

    SweepSeries series;
    series.scenario = s;
    for (double t : s.grid.times()) {
        const SwapResult r = swap_at(prop1, prop2, psi1, psi2, t, s.eps_bsm);
        series.points.push_back({t, r.concurrence, r.success_prob});
    }
    return series;
}

ModelComparison compare_models(const Scenario& s) {
    Scenario rabi = s;
    rabi.set_model(Model::rabi);
    Scenario jc = s;
    jc.set_model(Model::jc);

    ModelComparison cmp;
    cmp.rabi = sweep(rabi);
    cmp.jc = sweep(jc);

    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < cmp.rabi.points.size(); ++i) {
        const auto& pr = cmp.rabi.points[i];
        const auto& pj = cmp.jc.points[i];
        if (pr.concurrence && pj.concurrence) {
            const double d = std::abs(*pr.concurrence - *pj.concurrence);
            cmp.max_abs_diff = std::max(cmp.max_abs_diff, d);
            sum += d;
            ++count;
        }
    }
    cmp.mean_abs_diff = count > 0 ? sum / count : 0.0;
    return cmp;
}

std::vector<SweepSeries> detuning_scan(const Scenario& base,
                                       const std::vector<double>& omega2_list) {
    std::vector<SweepSeries> out;
    out.reserve(omega2_list.size());
    for (double omega2 : omega2_list) {
        Scenario s = base;
        s.set_detuning(omega2);
        out.push_back(sweep(s));
    }
    return out;
}

}  // namespace qswap
