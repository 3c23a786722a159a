#include "qswap/params.hpp"

#include <cmath>

namespace qswap {

Model model_from_string(const std::string& s) {
    if (s == "rabi") return Model::rabi;
    if (s == "jc") return Model::jc;
    throw InvalidParameter("unknown model '" + s + "' (expected rabi or jc)");
}

std::string to_string(Model m) {
    return m == Model::rabi ? "rabi" : "jc";
}

void SubsystemParams::validate() const {
    if (cavity_freq <= 0)
        throw InvalidParameter("cavity_freq must be positive");
    if (qubit_freq <= 0)
        throw InvalidParameter("qubit_freq must be positive");
    if (coupling < 0)
        throw InvalidParameter("coupling must be nonnegative");
    if (n_fock < 2)
        throw InvalidParameter("n_fock must be at least 2");
}

double coupling_from_physical(double current_amp, double inductance,
                              double cavity_freq) {
    if (current_amp < 0)
        throw InvalidParameter("current amplitude must be nonnegative");
    if (inductance <= 0)
        throw InvalidParameter("inductance must be positive");
    if (cavity_freq <= 0)
        throw InvalidParameter("cavity_freq must be positive");
    return current_amp * std::sqrt(cavity_freq * inductance / 2.0);
}

}  // namespace qswap
