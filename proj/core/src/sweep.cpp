#include "bergman/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "bergman/parallel.hpp"

namespace bergman {

namespace {

std::string csv_cell(double v) {
    char buf[40];
    if (std::isnan(v)) return "nan";
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

SymbolSweep run_symbol_sweep(const SpaceParams& sp, std::span<const double> grid,
                             ConstantsMode mode, int threads) {
    const double default_grid[4] = {0.5, 1.0, 2.0, 5.0};
    ConstantAuditReport audit = constant_audit(sp, default_grid);
    AuditedConstants cons = audit.constants;
    if (mode == ConstantsMode::literal) {
        cons.scale = 1.0;
        cons.wilson_b = 1.0 + 0.5 * sp.n;
    }
    SymbolSweep sweep{sp, std::move(audit), {}};
    sweep.samples.resize(grid.size());
    parallel_for_indexed(grid.size(), threads, [&](size_t i) {
        sweep.samples[i] = make_symbol_sample(sp, grid[i], cons);
    });
    return sweep;
}

void write_symbol_csv(std::ostream& os, const SymbolSweep& sweep) {
    os << "lambda,quad,wilson,peetre,f32,rel_gap,audit_scale\n";
    for (const SymbolSample& s : sweep.samples) {
        os << csv_cell(s.lambda) << ',' << csv_cell(s.quad_value) << ','
           << csv_cell(s.wilson_value) << ','
           << csv_cell(s.peetre_value ? *s.peetre_value : std::nan("")) << ','
           << csv_cell(s.f32_value ? *s.f32_value : std::nan("")) << ','
           << csv_cell(s.rel_gap_quad_wilson) << ',' << csv_cell(s.audit_scale)
           << '\n';
    }
}

} // namespace bergman
