#pragma once

#include <ostream>
#include <vector>

#include "bergman/spectral.hpp"

namespace bergman {

struct SymbolSweep {
    SpaceParams params;
    ConstantAuditReport audit;
    std::vector<SymbolSample> samples; // ordered by grid position
};

// Audits once, then evaluates every grid point (data-parallel over the
// grid, deterministic ordering).
SymbolSweep run_symbol_sweep(const SpaceParams& sp, std::span<const double> grid,
                             ConstantsMode mode = ConstantsMode::audited,
                             int threads = 1);

// CSV, header "lambda,quad,wilson,peetre,f32,rel_gap,audit_scale",
// 17-significant-digit decimal, "nan" for absent columns.
void write_symbol_csv(std::ostream& os, const SymbolSweep& sweep);

} // namespace bergman
