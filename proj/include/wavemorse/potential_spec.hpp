#ifndef WAVEMORSE_POTENTIAL_SPEC_HPP
#define WAVEMORSE_POTENTIAL_SPEC_HPP

#include <cstddef>
#include <string>

#include "wavemorse/galerkin.hpp"

namespace wavemorse {

// Tiny textual grammar for potentials:
//   "const:2.5"
//   "trig: 1 + 0.5 cos t - 0.25 sin 3t"
//   "file:samples.csv"            (CSV of t,value on a power-of-two grid)
// Terms are joined by +/-; a harmonic is [coeff] cos|sin [k]t.
Potential parse_potential(const std::string& spec, std::size_t grid = 0);

/// The trig-polynomial part of the grammar, as a plain periodic function
/// (may be signed).
PeriodicFunction parse_trig(const std::string& body, std::size_t grid = 0);

}  // namespace wavemorse

#endif
