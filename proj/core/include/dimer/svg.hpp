#pragma once

#include <string>

#include "dimer/dimer_core.hpp"
#include "dimer/moduli_fan.hpp"

namespace dimer {

// Hull, lattice points, edges and 1-based ray indices.
std::string triangulation_svg(const Fan& fan);

// Fundamental domain of the quiver with arrow labels; needs vertex positions.
std::string quiver_svg(const DimerModel& model, const Fan& fan);

}  // namespace dimer
