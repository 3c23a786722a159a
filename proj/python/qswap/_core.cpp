#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qswap/experiments.hpp"
#include "qswap/io.hpp"

namespace py = pybind11;
using namespace qswap;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entanglement swapping between two qubit-cavity systems";

    py::register_exception<InvalidParameter>(m, "InvalidParameter",
                                             PyExc_ValueError);
    py::register_exception<ContractViolation>(m, "ContractViolation",
                                              PyExc_RuntimeError);

    py::enum_<Model>(m, "Model")
        .value("rabi", Model::rabi)
        .value("jc", Model::jc);
    py::enum_<QubitConvention>(m, "QubitConvention")
        .value("half", QubitConvention::half)
        .value("full", QubitConvention::full);

    py::class_<SubsystemParams>(m, "SubsystemParams")
        .def(py::init<>())
        .def_readwrite("cavity_freq", &SubsystemParams::cavity_freq)
        .def_readwrite("qubit_freq", &SubsystemParams::qubit_freq)
        .def_readwrite("coupling", &SubsystemParams::coupling)
        .def_readwrite("n_fock", &SubsystemParams::n_fock)
        .def_readwrite("model", &SubsystemParams::model)
        .def_readwrite("convention", &SubsystemParams::convention)
        .def("validate", &SubsystemParams::validate)
        .def("dim", &SubsystemParams::dim);

    py::class_<StateVector>(m, "StateVector")
        .def_readonly("amplitudes", &StateVector::amplitudes)
        .def_readonly("n_fock", &StateVector::n_fock)
        .def("norm", &StateVector::norm)
        .def("at", py::overload_cast<int, int>(&StateVector::at, py::const_));

    py::class_<OperatorMatrix>(m, "OperatorMatrix")
        .def_readonly("matrix", &OperatorMatrix::matrix)
        .def_readonly("hermitian", &OperatorMatrix::hermitian);

    py::class_<Propagator>(m, "Propagator")
        .def_readonly("eigenvalues", &Propagator::eigenvalues)
        .def_readonly("eigenvectors", &Propagator::eigenvectors)
        .def("dim", &Propagator::dim);

    py::class_<CoefficientTable>(m, "CoefficientTable")
        .def_readonly("a", &CoefficientTable::a)
        .def_readonly("b", &CoefficientTable::b);

    py::class_<LeakageReport>(m, "LeakageReport")
        .def_readonly("max_leakage", &LeakageReport::max_leakage)
        .def_readonly("min_fidelity", &LeakageReport::min_fidelity)
        .def_readonly("pass_", &LeakageReport::pass);

    py::class_<TwoQubitState>(m, "TwoQubitState")
        .def(py::init([](Complex uu, Complex ud, Complex du, Complex dd) {
                 TwoQubitState s;
                 s.amps = {uu, ud, du, dd};
                 for (const auto& c : s.amps) s.norm_sq += std::norm(c);
                 return s;
             }),
             py::arg("uu"), py::arg("ud"), py::arg("du"), py::arg("dd"))
        .def_readonly("amps", &TwoQubitState::amps)
        .def_readonly("norm_sq", &TwoQubitState::norm_sq)
        .def_readonly("normalized", &TwoQubitState::normalized);

    py::class_<BsmOutcome>(m, "BsmOutcome")
        .def_readonly("state", &BsmOutcome::state)
        .def_readonly("success_prob", &BsmOutcome::success_prob);

    py::class_<SwapResult>(m, "SwapResult")
        .def_readonly("concurrence", &SwapResult::concurrence)
        .def_readonly("success_prob", &SwapResult::success_prob);

    py::class_<TimeGrid>(m, "TimeGrid")
        .def(py::init([](double start, double stop, double step) {
                 return TimeGrid{start, stop, step};
             }),
             py::arg("start") = 0.0, py::arg("stop") = 100.0,
             py::arg("step") = 0.05)
        .def_readwrite("start", &TimeGrid::start)
        .def_readwrite("stop", &TimeGrid::stop)
        .def_readwrite("step", &TimeGrid::step)
        .def("times", &TimeGrid::times);

    py::class_<Scenario>(m, "Scenario")
        .def_readwrite("label", &Scenario::label)
        .def_readwrite("params1", &Scenario::params1)
        .def_readwrite("params2", &Scenario::params2)
        .def_readwrite("grid", &Scenario::grid)
        .def_readwrite("eps_bsm", &Scenario::eps_bsm)
        .def("initial_state_1", &Scenario::initial_state_1)
        .def("initial_state_2", &Scenario::initial_state_2)
        .def("set_model", &Scenario::set_model)
        .def("set_detuning", &Scenario::set_detuning);

    py::class_<SweepPoint>(m, "SweepPoint")
        .def_readonly("t", &SweepPoint::t)
        .def_readonly("concurrence", &SweepPoint::concurrence)
        .def_readonly("success_prob", &SweepPoint::success_prob);

    py::class_<SweepSeries>(m, "SweepSeries")
        .def_readonly("points", &SweepSeries::points)
        .def_readonly("scenario", &SweepSeries::scenario)
        .def("max_concurrence", &SweepSeries::max_concurrence);

    py::class_<ModelComparison>(m, "ModelComparison")
        .def_readonly("rabi", &ModelComparison::rabi)
        .def_readonly("jc", &ModelComparison::jc)
        .def_readonly("max_abs_diff", &ModelComparison::max_abs_diff)
        .def_readonly("mean_abs_diff", &ModelComparison::mean_abs_diff);

    m.def("build_annihilation", &build_annihilation, py::arg("n_fock"));
    m.def("build_hamiltonian", &build_hamiltonian, py::arg("params"));
    m.def("build_parity", &build_parity, py::arg("n_fock"));
    m.def("build_excitation_number", &build_excitation_number,
          py::arg("n_fock"));
    m.def("make_initial_state", &make_initial_state, py::arg("qubit_amps"),
          py::arg("photon_amps"), py::arg("n_fock"));
    m.def("basis_state", &basis_state, py::arg("q"), py::arg("n"),
          py::arg("n_fock"));
    m.def("coupling_from_physical", &coupling_from_physical,
          py::arg("current_amp"), py::arg("inductance"),
          py::arg("cavity_freq"));

    m.def("diagonalize", &diagonalize, py::arg("h"));
    m.def("make_propagator", &make_propagator, py::arg("params"));
    m.def("propagate", &propagate, py::arg("prop"), py::arg("psi0"),
          py::arg("t"));
    m.def("coefficients", &coefficients, py::arg("psi"));
    m.def("truncation_check", &truncation_check, py::arg("params"),
          py::arg("psi0"), py::arg("t_max"), py::arg("factor"),
          py::arg("dt") = 0.5);

    m.def("bsm_project", &bsm_project, py::arg("c1"), py::arg("c2"));
    m.def("normalize", &normalize, py::arg("state"));
    m.def("concurrence_pure", &concurrence_pure, py::arg("state"));
    m.def("concurrence_magic_basis", &concurrence_magic_basis,
          py::arg("state"));
    m.def("concurrence_spin_flip", &concurrence_spin_flip, py::arg("state"));
    m.def("swap_at", &swap_at, py::arg("prop1"), py::arg("prop2"),
          py::arg("psi1"), py::arg("psi2"), py::arg("t"),
          py::arg("eps_bsm") = kDefaultBsmEpsilon);

    m.def("scenario_labels", &scenario_labels);
    m.def("build_scenario", &build_scenario, py::arg("label"));
    m.def("sweep", &sweep, py::arg("scenario"));
    m.def("compare_models", &compare_models, py::arg("scenario"));
    m.def("detuning_scan", &detuning_scan, py::arg("base"),
          py::arg("omega2_list"));

    m.def("to_csv", &to_csv, py::arg("series"));
    m.def("to_json", &to_json, py::arg("series"));

    m.attr("SPIN_UP") = kSpinUp;
    m.attr("SPIN_DOWN") = kSpinDown;
    m.attr("DEFAULT_BSM_EPSILON") = kDefaultBsmEpsilon;
}
