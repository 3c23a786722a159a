#ifndef QSWAP_IO_HPP
#define QSWAP_IO_HPP

#include <iosfwd>
#include <string>

#include "qswap/experiments.hpp"

namespace qswap {

// CSV columns: t_prime, concurrence, bsm_success_prob, defined (0/1).
// Undefined concurrence prints as "nan" with defined = 0. Floats carry
// 12 significant digits.
void write_csv(const SweepSeries& s, std::ostream& out);
std::string to_csv(const SweepSeries& s);

// Same semantics with an explicit null for undefined concurrence.
std::string to_json(const SweepSeries& s);

}  // namespace qswap

#endif
