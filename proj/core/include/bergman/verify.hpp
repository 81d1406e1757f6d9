#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergman/space.hpp"
#include "bergman/spectral.hpp"

namespace bergman {

struct CriterionResult {
    int id = 0;
    std::string label;
    bool passed = false;
    double worst = 0.0;     // worst measured deviation
    double tolerance = 0.0; // pinned acceptance tolerance
    std::string details;    // per-check lines
};

struct VerifyOptions {
    std::optional<SpaceParams> focus; // extra parameter triple to fold in
    ConstantsMode mode = ConstantsMode::audited;
};

struct VerifyReport {
    std::vector<CriterionResult> criteria;

    bool all_passed() const;
    std::string to_text() const; // one pass/fail line per criterion
};

// Runs the full acceptance suite at the pinned tolerances.
VerifyReport run_acceptance(const VerifyOptions& opts = {});

} // namespace bergman
