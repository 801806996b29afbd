#pragma once

#include <string>
#include <vector>

#include "dimer/dimer_core.hpp"
#include "dimer/divisors.hpp"
#include "dimer/matchings.hpp"
#include "dimer/moduli_fan.hpp"
#include "dimer/reid.hpp"

namespace dimer {

// JSON reports.  Ray indices are 1-based, arrow and vertex ids 0-based.
std::string validate_report(const DimerModel& model, const std::vector<std::string>& diagnostics);
std::string matchings_report(const MatchingPoints& points);
std::string fan_report(const DimerModel& model, const Fan& fan);
std::string labels_report(const DimerModel& model, const Fan& fan);
std::string chamber_report(const StabilityParam& theta, const ChamberWalls& cw);
std::string psi_report(const Fan& fan, const PsiReport& report);

}  // namespace dimer
