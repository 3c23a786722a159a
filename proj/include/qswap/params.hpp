#ifndef QSWAP_PARAMS_HPP
#define QSWAP_PARAMS_HPP

#include <string>

#include "qswap/errors.hpp"

namespace qswap {

enum class Model { rabi, jc };

// H_Q = (Omega/2) sigma_z (half) or H_Q = Omega sigma_z (full).
// With the half convention omega = Omega is true resonance.
enum class QubitConvention { half, full };

Model model_from_string(const std::string& s);
std::string to_string(Model m);

// Parameters of one qubit-cavity subsystem. All frequencies are in units
// of omega_1, time in units of 1/omega_1, hbar = 1.
struct SubsystemParams {
    double cavity_freq = 1.0;  // omega
    double qubit_freq = 1.0;   // Omega
    double coupling = 0.2;     // g
    int n_fock = 10;           // retained Fock levels |0> ... |n_fock-1>
    Model model = Model::rabi;
    QubitConvention convention = QubitConvention::half;

    int dim() const { return 2 * n_fock; }
    void validate() const;
};

// g = I0 * sqrt(omega * L / 2), hbar = 1.
double coupling_from_physical(double current_amp, double inductance,
                              double cavity_freq);

}  // namespace qswap

#endif
