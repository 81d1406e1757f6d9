// Command-line front end: verification suite, spectral-symbol sweeps,
// kernel and basis inspection, constant-audit reports.
//
// Exit codes: 0 pass, 1 check failure, 2 usage/config error.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/ball.hpp"
#include "bergman/berezin.hpp"
#include "bergman/eigenspace.hpp"
#include "bergman/errors.hpp"
#include "bergman/harmonic.hpp"
#include "bergman/jacobi.hpp"
#include "bergman/parallel.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/space.hpp"
#include "bergman/sweep.hpp"
#include "bergman/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// "re,im,re,im,..." -> n complex coordinates
bergman::BallPoint parse_point(const std::string& text, int n) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    if (int(vals.size()) != 2 * n)
        throw std::invalid_argument("point needs " + std::to_string(2 * n) +
                                    " comma-separated reals (re,im per coordinate)");
    std::vector<std::complex<double>> c(n);
    for (int j = 0; j < n; ++j) c[j] = {vals[2 * j], vals[2 * j + 1]};
    return bergman::BallPoint(std::move(c));
}

struct CommonParams {
    int n = 2;
    double nu = 3.5;
    int m = 1;
    std::string mode = "audited";

    bergman::SpaceParams space() const { return bergman::SpaceParams(n, nu, m); }
    bergman::ConstantsMode constants_mode() const {
        return mode == "literal-constants" ? bergman::ConstantsMode::literal
                                           : bergman::ConstantsMode::audited;
    }
};

void add_common(CLI::App* cmd, CommonParams& p) {
    cmd->add_option("-n,--n", p.n, "complex dimension (>= 2)");
    cmd->add_option("--nu", p.nu, "weight parameter (2*nu > n)");
    cmd->add_option("-m,--m", p.m, "discrete level (m <= floor(nu - n/2))");
    cmd->add_option("--mode", p.mode, "constants mode: audited | literal-constants")
        ->check(CLI::IsMember({"audited", "literal-constants"}));
}

int cmd_verify(const CommonParams& p, const std::string& out_path) {
    bergman::VerifyOptions opts;
    opts.focus = p.space();
    opts.mode = p.constants_mode();
    bergman::VerifyReport report = bergman::run_acceptance(opts);
    std::string text = report.to_text();
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        os << text;
        if (!os) {
            std::cerr << "error: cannot write report to " << out_path << "\n";
            return kExitUsage;
        }
    }
    if (!report.all_passed()) {
        std::cerr << "failing checks:\n";
        for (const auto& cr : report.criteria)
            if (!cr.passed) std::cerr << "  [" << cr.id << "] " << cr.label << "\n";
        return kExitCheckFailed;
    }
    return kExitPass;
}

int cmd_symbol(const CommonParams& p, double start, double stop, double step,
               const std::string& out_path) {
    if (!(step > 0.0) || stop < start) {
        std::cerr << "error: empty or descending lambda grid\n";
        return kExitUsage;
    }
    std::vector<double> grid;
    for (double lam = start; lam <= stop + 1e-12; lam += step) grid.push_back(lam);
    bergman::SymbolSweep sweep = bergman::run_symbol_sweep(
        p.space(), grid, p.constants_mode(), bergman::env_thread_count());
    std::ostringstream csv;
    bergman::write_symbol_csv(csv, sweep);
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream os(out_path, std::ios::binary);
        os << csv.str();
        if (!os) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitUsage;
        }
    }
    for (const bergman::SymbolSample& s : sweep.samples)
        if (std::isnan(s.quad_value) || std::isnan(s.wilson_value)) return kExitCheckFailed;
    return kExitPass;
}

int cmd_kernel(const CommonParams& p, const std::string& z_text,
               const std::string& w_text, int p_max) {
    bergman::SpaceParams sp = p.space();
    bergman::BallPoint z = parse_point(z_text, sp.n);
    bergman::BallPoint w = parse_point(w_text, sp.n);
    bergman::BasisStore store(sp.n);
    std::complex<double> closed = bergman::kernel_closed(sp, z, w);
    bergman::TruncatedKernel trunc = bergman::kernel_truncated(sp, z, w, p_max, store);
    double overlap = bergman::cs_overlap_abs2(sp, z, w);
    double dist = bergman::bergman_distance(z, w);
    double gap = std::abs(trunc.value - closed) / std::max(1e-300, std::abs(closed));
    std::cout << "kernel_closed    = " << fmt17(closed.real()) << " + "
              << fmt17(closed.imag()) << "i\n";
    std::cout << "kernel_truncated = " << fmt17(trunc.value.real()) << " + "
              << fmt17(trunc.value.imag()) << "i   (p_max " << p_max
              << ", tail est " << fmt17(trunc.tail_estimate) << ")\n";
    std::cout << "closed-vs-truncated rel gap = " << fmt17(gap) << "\n";
    std::cout << "cs_overlap_abs2  = " << fmt17(overlap) << "\n";
    std::cout << "bergman_distance = " << fmt17(dist) << "\n";
    return kExitPass;
}

int cmd_basis(const CommonParams& p, int p_max) {
    bergman::SpaceParams sp = p.space();
    // Gram diagonal by the exact-angular x Gauss-Jacobi route, plus the
    // harmonic dimensions per (p,q) block
    bergman::QuadratureRule rule =
        bergman::gauss_jacobi_rule(64, sp.n - 1.0, sp.beta_exponent() - 1.0);
    std::cout << "Gram matrix of the orthonormal basis over p <= " << p_max
              << ", q <= " << sp.m << " (angular part exact, radial Gauss-Jacobi):\n";
    double worst = 0.0;
    for (int pp = 0; pp <= p_max; ++pp)
        for (int q = 0; q <= sp.m; ++q) {
            double kap = bergman::kappa_norm(sp, pp, q);
            double alpha = sp.n + pp + q - 1.0;
            auto f = [&](double t) {
                double pj = bergman::jacobi_eval_t<double>(
                    sp.m - q, alpha, sp.beta_exponent(), 1.0 - 2.0 * t);
                return std::pow(t, double(pp + q)) * pj * pj;
            };
            double diag = kap * kap * sp.n * bergman::apply_rule(rule, f);
            worst = std::max(worst, std::abs(diag - 1.0));
            std::cout << "  block (p=" << pp << ", q=" << q
                      << "): dim=" << bergman::harmonic_dimension(sp.n, pp, q)
                      << "  diag=" << fmt17(diag) << "  offdiag=0 (exact)\n";
        }
    std::cout << "max |diag - 1| = " << fmt17(worst) << "\n";
    return worst <= 1e-10 ? kExitPass : kExitCheckFailed;
}

int cmd_audit(const CommonParams& p) {
    const double grid[4] = {0.5, 1.0, 2.0, 5.0};
    bergman::ConstantAuditReport report = bergman::constant_audit(p.space(), grid);
    std::cout << report.to_text();
    return report.passed ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Bergman spaces on the complex ball: verification "
                 "suite, Berezin-transform spectral symbols and kernel tools"};
    app.require_subcommand(1);

    CommonParams params;
    std::string out_path;
    double lam_start = 0.0, lam_stop = 5.0, lam_step = 0.5;
    std::string z_text = "0,0,0,0", w_text = "0.3,0,0,0";
    int p_max_kernel = 40, p_max_basis = 3;

    CLI::App* verify = app.add_subcommand("verify", "run the full acceptance suite");
    add_common(verify, params);
    verify->add_option("-o,--out", out_path, "also write the report to a file");

    CLI::App* symbol = app.add_subcommand("symbol", "tabulate the spectral symbol as CSV");
    add_common(symbol, params);
    symbol->add_option("--lambda-start", lam_start, "grid start");
    symbol->add_option("--lambda-stop", lam_stop, "grid stop (inclusive)");
    symbol->add_option("--lambda-step", lam_step, "grid step (> 0)");
    symbol->add_option("-o,--out", out_path, "CSV output path (default stdout)");

    CLI::App* kernel = app.add_subcommand("kernel", "evaluate kernels at a point pair");
    add_common(kernel, params);
    kernel->add_option("--z", z_text, "point z as re,im per coordinate");
    kernel->add_option("--w", w_text, "point w as re,im per coordinate");
    kernel->add_option("--pmax", p_max_kernel, "truncation degree");

    CLI::App* basis = app.add_subcommand("basis", "print the basis Gram diagnostics");
    add_common(basis, params);
    basis->add_option("--pmax", p_max_basis, "largest radial degree");

    CLI::App* audit = app.add_subcommand("audit", "print the constant-audit report");
    add_common(audit, params);

    app.set_config("--config", "", "plain key=value defaults file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(params, out_path);
        if (symbol->parsed()) return cmd_symbol(params, lam_start, lam_stop, lam_step, out_path);
        if (kernel->parsed()) return cmd_kernel(params, z_text, w_text, p_max_kernel);
        if (basis->parsed()) return cmd_basis(params, p_max_basis);
        if (audit->parsed()) return cmd_audit(params);
    } catch (const bergman::admissibility_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
