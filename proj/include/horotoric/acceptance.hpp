#pragma once

#include <iosfwd>

namespace horotoric {

/// Runs the full verification checklist, printing one PASS/FAIL line per
/// criterion. Returns true iff every criterion passed. All expected values
/// are exact; randomized checks use fixed seeds.
bool run_acceptance(std::ostream& os);

}  // namespace horotoric
