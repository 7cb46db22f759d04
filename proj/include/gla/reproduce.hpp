#pragma once

#include <string>
#include <vector>

#include "gla/report.hpp"

namespace gla {

// One stored-example run: computed values against the stored displays.
// pass reflects the mathematical invariants only; per-term deviations from
// the stored displays are annotated in the report, not failures.
struct ReproduceResult {
    Json report;
    bool pass = false;
};

std::vector<std::string> reproduce_targets();

// Throws std::invalid_argument for an unknown target name.
ReproduceResult reproduce(const std::string& target);

}  // namespace gla
