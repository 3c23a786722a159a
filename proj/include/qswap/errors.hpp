#ifndef QSWAP_ERRORS_HPP
#define QSWAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qswap {

// Invalid user-supplied parameters or states.
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numerical contract was violated (non-Hermitian input, lost norm, ...).
// The CLI maps this to exit code 2.
struct ContractViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qswap

#endif
