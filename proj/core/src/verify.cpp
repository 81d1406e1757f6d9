#include "bergman/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "bergman/berezin.hpp"
#include "bergman/eigenspace.hpp"
#include "bergman/exact_linalg.hpp"
#include "bergman/gamma.hpp"
#include "bergman/harmonic.hpp"
#include "bergman/jacobi.hpp"
#include "bergman/linearization.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/rational.hpp"
#include "bergman/sphere_rule.hpp"
#include "bergman/sweep.hpp"

namespace bergman {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

struct Checker {
    CriterionResult result;
    std::ostringstream details;

    Checker(int id, std::string label, double tol) {
        result.id = id;
        result.label = std::move(label);
        result.tolerance = tol;
        result.passed = true;
    }

    void observe(double err, const std::string& what) {
        result.worst = std::max(result.worst, err);
        if (!(err <= result.tolerance)) {
            result.passed = false;
            details << "    FAIL " << what << "  err=" << fmt(err) << "\n";
        }
    }
    void fail(const std::string& what) {
        result.passed = false;
        details << "    FAIL " << what << "\n";
    }
    void note(const std::string& line) { details << "    " << line << "\n"; }

    CriterionResult finish() {
        result.details = details.str();
        return result;
    }
};

std::vector<SpaceParams> symbol_param_sets() {
    return {SpaceParams(2, 3.5, 0), SpaceParams(2, 3.5, 1), SpaceParams(2, 3.5, 2),
            SpaceParams(3, 4.25, 1)};
}

const double kLambdaGrid[4] = {0.5, 1.0, 2.0, 5.0};

BallPoint point2(std::complex<double> a, std::complex<double> b) {
    return BallPoint({a, b});
}

// deterministic interior points
std::vector<BallPoint> random_ball_points(int n, int count, double max_norm,
                                          unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<BallPoint> out;
    while (int(out.size()) < count) {
        std::vector<std::complex<double>> c(n);
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            c[j] = {u(rng), u(rng)};
            s += std::norm(c[j]);
        }
        double r = std::sqrt(s);
        if (r == 0.0) continue;
        double target = 0.15 + 0.85 * max_norm * std::abs(u(rng));
        if (target >= max_norm) target = max_norm * 0.95;
        for (auto& x : c) x *= target / r;
        out.push_back(BallPoint(std::move(c)));
    }
    return out;
}

std::vector<std::complex<double>> random_sphere_point(int n, std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<std::complex<double>> c(n);
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
        c[j] = {g(rng), g(rng)};
        s += std::norm(c[j]);
    }
    double r = std::sqrt(s);
    for (auto& x : c) x /= r;
    return c;
}

CriterionResult criterion_symbol_cross_validation() {
    Checker c(1, "symbol cross-validation: audited Wilson form vs quadrature oracle",
              1e-8);
    for (const SpaceParams& sp : symbol_param_sets()) {
        ConstantAuditReport audit = constant_audit(sp, kLambdaGrid);
        for (double lam : kLambdaGrid) {
            double quad = c_const(sp) * spherical_transform_quad(sp, {lam, 0.0});
            double wil = symbol_wilson(sp, {lam, 0.0}, &audit.constants);
            double rel = std::abs(wil - quad) / std::abs(quad);
            char what[128];
            std::snprintf(what, sizeof what, "(n=%d nu=%g m=%d lambda=%g)", sp.n, sp.nu,
                          sp.m, lam);
            c.observe(rel, what);
        }
    }
    return c.finish();
}

CriterionResult criterion_peetre_reduction() {
    Checker c(2, "m=0 reduction: quadrature, Wilson and inverse-Gamma forms agree",
              1e-8);
    SpaceParams sp(2, 3.5, 0);
    ConstantAuditReport audit = constant_audit(sp, kLambdaGrid);
    for (double lam : kLambdaGrid) {
        double quad = c_const(sp) * spherical_transform_quad(sp, {lam, 0.0});
        double wil = symbol_wilson(sp, {lam, 0.0}, &audit.constants);
        double pee = symbol_peetre(sp.nu, sp.n, {lam, 0.0});
        c.observe(std::abs(wil - quad) / std::abs(quad), "wilson vs quad");
        c.observe(std::abs(pee - quad) / std::abs(quad), "peetre vs quad");
        c.observe(std::abs(pee - wil) / std::abs(wil), "peetre vs wilson");
    }
    double p0 = symbol_peetre(2.0, 2, {0.0, 0.0});
    double exact_err = std::abs(p0 - 2.0 / 3.0);
    if (exact_err > 1e-12) c.fail("peetre(n=2,nu=2,lambda=0) != 2/3");
    c.note("peetre(2,2,0) = " + std::to_string(p0) + " (target 2/3, err " +
           fmt(exact_err) + ")");
    return c.finish();
}

CriterionResult criterion_koornwinder() {
    Checker c(3, "Gamma-Wilson transform identity: quadrature vs audited closed form",
              1e-7);
    const KoornwinderParams sets[6] = {
        {1.0, 0.0, 3.0, 2.5},  {0.5, 0.3, 2.0, 1.5}, {2.0, -0.4, 4.0, 3.3},
        {1.5, 1.0, 2.5, 2.0},  {1.0, 0.0, 5.0, 2.0}, {0.7, -0.2, 1.2, 0.8}};
    const double lambdas[6] = {1.2, 2.0, 0.9, 3.0, 1.0, 1.7};
    for (int i = 0; i < 6; ++i) {
        for (int k = 0; k <= 2; ++k) {
            double lhs = koornwinder_integral_quad(sets[i], k, lambdas[i]);
            double rhs = koornwinder_rhs(sets[i], k, lambdas[i], ConstantsMode::audited);
            double rel = std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs));
            char what[160];
            std::snprintf(what, sizeof what,
                          "(alpha=%g beta=%g delta=%g mu'=%g k=%d lambda=%g)",
                          sets[i].alpha, sets[i].beta, sets[i].delta, sets[i].mu_prime,
                          k, lambdas[i]);
            c.observe(rel, what);
        }
    }
    return c.finish();
}

CriterionResult criterion_linearization() {
    Checker c(4, "linearization identity: residual and exact-rational oracle match",
              1e-10);
    const std::pair<long long, long long> nus[10] = {
        {9, 4}, {5, 2}, {3, 1}, {7, 2}, {4, 1}, {17, 4}, {9, 2}, {5, 1}, {11, 2}, {6, 1}};
    std::vector<double> cheb(15);
    for (int i = 0; i < 15; ++i) cheb[i] = std::cos(M_PI * (2.0 * i + 1.0) / 30.0);
    int combos = 0, exact_matches = 0;
    for (int n = 2; n <= 4; ++n)
        for (auto [num, den] : nus)
            for (int m = 0; m <= 2; ++m) {
                double nu = double(num) / double(den);
                if (!(2 * nu > n) || m > int(std::floor(nu - 0.5 * n)) ||
                    !(2 * (nu - m) - n > 0))
                    continue;
                SpaceParams sp(n, nu, m);
                ++combos;
                double res = linearization_residual(sp, cheb);
                char what[96];
                std::snprintf(what, sizeof what, "residual (n=%d nu=%g m=%d)", n, nu, m);
                c.observe(res, what);

                Rational nu_r(num, den);
                auto exact = linearization_coeffs_exact(n, nu_r, m);
                auto oracle = linearization_coeffs_via_system_exact(n, nu_r, m);
                bool same = exact.size() == oracle.size();
                for (size_t k = 0; same && k < exact.size(); ++k)
                    same = (exact[k] == oracle[k]);
                if (!same) {
                    std::snprintf(what, sizeof what, "exact A_k mismatch (n=%d nu=%g m=%d)",
                                  n, nu, m);
                    c.fail(what);
                } else {
                    ++exact_matches;
                }
            }
    c.note(std::to_string(combos) + " admissible triples; " +
           std::to_string(exact_matches) + " exact-rational oracle matches");
    return c.finish();
}

CriterionResult criterion_orthonormality(const std::optional<SpaceParams>& focus) {
    Checker c(5, "orthonormality: Gram matrix over p <= 3 is the identity", 1e-10);
    std::vector<SpaceParams> sets;
    for (int n : {2, 3})
        for (double nu : {3.5, 4.25})
            for (int m = 0; m <= 2; ++m) {
                if (!(2 * nu > n) || m > int(std::floor(nu - 0.5 * n)) ||
                    !(2 * (nu - m) - n > 0))
                    continue;
                sets.push_back(SpaceParams(n, nu, m));
            }
    if (focus) sets.push_back(*focus);
    const int p_max = 3;
    for (const SpaceParams& sp : sets) {
        BasisStore store(sp.n);
        // off-diagonal angular integrals, exact: same-(p,q) rows are
        // orthogonal by construction; cross-bidegree pairs with matching
        // torus character must integrate to zero exactly
        bool exact_zero = true;
        for (int p = 0; p <= p_max && exact_zero; ++p)
            for (int q = 0; q <= sp.m && exact_zero; ++q) {
                const HarmonicBasis& hb = store.exact(p, q);
                for (int p2 = p; p2 <= p_max && exact_zero; ++p2)
                    for (int q2 = (p2 == p ? q + 1 : 0); q2 <= sp.m && exact_zero; ++q2) {
                        if (p - q != p2 - q2) continue; // zero by torus symmetry
                        const HarmonicBasis& hb2 = store.exact(p2, q2);
                        for (int j = 0; j < hb.dim() && exact_zero; ++j)
                            for (int l = 0; l < hb2.dim() && exact_zero; ++l) {
                                Rational ip = 0;
                                for (size_t ca = 0; ca < hb.cols(); ++ca) {
                                    if (hb.coeffs[j][ca] == 0) continue;
                                    const MultiIndex& a1 = hb.alphas[hb.col_alpha[ca]];
                                    const MultiIndex& b1 = hb.betas[hb.col_beta[ca]];
                                    for (size_t cb = 0; cb < hb2.cols(); ++cb) {
                                        if (hb2.coeffs[l][cb] == 0) continue;
                                        const MultiIndex& a2 = hb2.alphas[hb2.col_alpha[cb]];
                                        const MultiIndex& b2 = hb2.betas[hb2.col_beta[cb]];
                                        ip += hb.coeffs[j][ca] * hb2.coeffs[l][cb] *
                                              sphere_monomial_integral(a1 + b2, a2 + b1);
                                    }
                                }
                                if (ip != 0) exact_zero = false;
                            }
                    }
            }
        char what[96];
        if (!exact_zero) {
            std::snprintf(what, sizeof what, "cross-bidegree overlap (n=%d nu=%g m=%d)",
                          sp.n, sp.nu, sp.m);
            c.fail(what);
        }
        double dev = kappa_diagonal_deviation(sp, p_max);
        std::snprintf(what, sizeof what, "Gram diagonal (n=%d nu=%g m=%d)", sp.n, sp.nu,
                      sp.m);
        c.observe(dev, what);
    }
    return c.finish();
}

CriterionResult criterion_kernel_agreement() {
    Checker c(6, "kernel agreement: truncated bilinear sum vs closed form", 1e-8);
    SpaceParams sp(2, 3.5, 1);
    BasisStore store(sp.n);
    auto zs = random_ball_points(2, 10, 0.6, 12345);
    auto ws = random_ball_points(2, 10, 0.6, 54321);
    for (int i = 0; i < 10; ++i) {
        TruncatedKernel tk = kernel_truncated(sp, zs[i], ws[i], 40, store);
        std::complex<double> kc = kernel_closed(sp, zs[i], ws[i]);
        double rel = std::abs(tk.value - kc) / std::abs(kc);
        c.observe(rel, "pair " + std::to_string(i));
    }
    // diagonal law at a tighter tolerance
    double N = normalization_factor(sp);
    double worst_diag = 0.0;
    for (const BallPoint& z : random_ball_points(2, 20, 0.85, 777)) {
        std::complex<double> kd = kernel_closed(sp, z, z);
        worst_diag = std::max(worst_diag, std::abs(kd - N) / N);
    }
    if (worst_diag > 1e-11) c.fail("diagonal varies: " + fmt(worst_diag));
    c.note("diagonal relative variation " + fmt(worst_diag) + " (tol 1e-11), N=" +
           std::to_string(N));
    return c.finish();
}

CriterionResult criterion_resolution_identity() {
    Checker c(7, "normalization: unit overlaps, B[1] = 1 and unit kernel mass", 1e-8);
    SpaceParams sp(2, 3.5, 1);
    // overlap diagonal
    double worst_overlap = 0.0;
    for (const BallPoint& z : random_ball_points(2, 10, 0.8, 99)) {
        double ov = cs_overlap_abs2(sp, z, z);
        worst_overlap = std::max(worst_overlap, std::abs(ov - 1.0));
    }
    if (worst_overlap > 1e-12) c.fail("diagonal overlap deviates: " + fmt(worst_overlap));
    c.note("overlap diagonal deviation " + fmt(worst_overlap) + " (tol 1e-12)");

    const BallPoint base_points[3] = {BallPoint::origin(2), point2(0.3, 0.0),
                                      point2(0.0, 0.5)};
    ObservableFn one{[](const BallPoint&) { return 1.0; }, ObservableFn::Growth::bounded};
    for (const BallPoint& z : base_points) {
        BerezinResult r = berezin_apply(sp, one, z);
        c.observe(std::abs(r.value - 1.0), "B[1] at |z|=" + std::to_string(std::sqrt(z.norm_sq())));
    }
    // kernel mass by direct quadrature in w (no invariance substitution);
    // phase resolution sized for |z| = 0.5 at 1e-8
    AngularRule ang = sphere_product_rule(2, 20, 48);
    QuadratureRule rad = gauss_jacobi_rule(96, sp.n - 1.0, sp.beta_exponent() - 1.0);
    for (const BallPoint& z : base_points) {
        auto f = [&](double t) {
            double root = std::sqrt(t);
            double acc = 0.0;
            for (size_t i = 0; i < ang.size(); ++i) {
                std::vector<std::complex<double>> w(2);
                for (int j = 0; j < 2; ++j) w[j] = root * ang.nodes[i][j];
                BallPoint pw(std::move(w));
                std::complex<double> ip = hermitian_inner(z, pw);
                double num = (1.0 - z.norm_sq()) / std::norm(1.0 - ip);
                double pm = jacobi_eval_t<double>(
                    sp.m, sp.n - 1.0, sp.beta_exponent(),
                    1.0 - 2.0 * (1.0 - num * (1.0 - t)));
                acc += ang.weights[i] * std::pow(num, 2.0 * (sp.nu - sp.m)) * pm * pm;
            }
            return acc;
        };
        double mass = c_const(sp) * sp.n * apply_rule(rad, f);
        c.observe(std::abs(mass - 1.0), "kernel mass");
    }
    return c.finish();
}

CriterionResult criterion_eigenchecks() {
    Checker c(8, "finite-difference eigenchecks of the Schroedinger operator", 1e-5);
    SpaceParams sp(2, 3.5, 1);
    BasisStore store(sp.n);
    const double eps = sp.eigenvalue(); // 44 at (2, 3.5, 1)
    BallPoint z({std::complex<double>(0.2, 0.0), std::complex<double>(0.1, 0.05)});
    for (BasisIndex idx : {BasisIndex{0, 0, 0}, BasisIndex{1, 0, 0}, BasisIndex{2, 1, 0}}) {
        BallFn f = [&](const BallPoint& w) { return phi_eval(sp, idx, w, store); };
        std::complex<double> hval = apply_H_fd(sp.nu, f, z);
        std::complex<double> fval = f(z);
        double rel = std::abs(hval - eps * fval) / (eps * std::abs(fval));
        char what[64];
        std::snprintf(what, sizeof what, "H Phi (p=%d q=%d)", idx.p, idx.q);
        c.observe(rel, what);
    }
    // Laplace-Beltrami on the spherical function
    const double lam = 0.7;
    const int n = 2;
    BallFn phi_l = [&](const BallPoint& w) {
        return spherical_function(n, {lam, 0.0}, w);
    };
    std::complex<double> lap = apply_laplace_beltrami_fd(phi_l, z);
    std::complex<double> fval = phi_l(z);
    double target = -(lam * lam + n * n);
    double rel = std::abs(lap - target * fval) / std::abs(target * fval);
    c.observe(rel, "Delta phi_lambda");
    c.note("epsilon(2,3.5,1) = " + std::to_string(eps));
    return c.finish();
}

CriterionResult criterion_invariance() {
    Checker c(9, "automorphism equivariance of the transform", 1e-6);
    SpaceParams sp(2, 3.5, 1);
    ObservableFn phi{[](const BallPoint& w) {
                         return std::exp(-w.norm_sq()) *
                                (1.0 + 0.5 * w[0].real() + 0.25 * w[1].imag());
                     },
                     ObservableFn::Growth::bounded};
    const BallPoint z = point2(0.1, std::complex<double>(0.0, 0.15));
    const BallPoint as[3] = {point2(0.3, 0.0), point2(0.0, std::complex<double>(0.2, -0.25)),
                             point2(std::complex<double>(-0.15, 0.1), 0.2)};
    for (const BallPoint& a : as) {
        ObservableFn composed{
            [&](const BallPoint& w) { return phi.fn(mobius_involution(a, w)); },
            ObservableFn::Growth::bounded};
        double lhs = berezin_apply(sp, composed, z).value;
        double rhs = berezin_apply(sp, phi, mobius_involution(a, z)).value;
        c.observe(std::abs(lhs - rhs), "automorphism");
    }
    return c.finish();
}

CriterionResult criterion_harmonic_spaces() {
    Checker c(10, "harmonic spaces: exact nullspace dimensions and zonal constancy",
              1e-12);
    for (int n = 2; n <= 4; ++n)
        for (int p = 0; p <= 6; ++p)
            for (int q = 0; p + q <= 6; ++q) {
                auto [lap, ncols] = laplacian_matrix(n, p, q);
                long long null_dim = (long long)ncols - bareiss_rank(lap);
                long long d = harmonic_dimension(n, p, q);
                if (null_dim != d) {
                    char what[96];
                    std::snprintf(what, sizeof what,
                                  "dim mismatch n=%d p=%d q=%d: %lld vs %lld", n, p, q,
                                  null_dim, d);
                    c.fail(what);
                }
            }
    std::mt19937 rng(2024);
    for (auto [n, p, q] : {std::tuple<int, int, int>{2, 1, 1}, {2, 2, 0}, {2, 3, 2},
                           {3, 2, 1}, {3, 1, 1}, {4, 2, 1}}) {
        HarmonicBasis hb = build_harmonic_basis(n, p, q);
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 20; ++i) {
            auto theta = random_sphere_point(n, rng);
            double v = addition_kernel_check(hb, theta);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        char what[96];
        std::snprintf(what, sizeof what, "zonal constancy n=%d p=%d q=%d", n, p, q);
        c.observe(hi - lo, what);
    }
    return c.finish();
}

CriterionResult criterion_diagnostic_record(ConstantsMode mode) {
    Checker c(11, "diagnostic record: audit report and hypergeometric-sum column",
              1e-8);
    for (SpaceParams sp : {SpaceParams(2, 2.0, 0), SpaceParams(2, 3.5, 1)}) {
        ConstantAuditReport audit = constant_audit(sp, kLambdaGrid);
        c.observe(audit.constants.residual, "audited residual");
        if (audit.to_text().empty()) c.fail("empty audit report");
        SymbolSweep sweep = run_symbol_sweep(sp, kLambdaGrid, mode);
        for (const SymbolSample& s : sweep.samples)
            if (!s.f32_value) c.fail("missing diagnostic column");
        std::ostringstream csv;
        write_symbol_csv(csv, sweep);
        if (csv.str().rfind("lambda,quad,wilson,peetre,f32,rel_gap,audit_scale\n", 0) != 0)
            c.fail("CSV header mismatch");
        c.note("fitted scale (n=" + std::to_string(sp.n) + ", m=" + std::to_string(sp.m) +
               ") = " + std::to_string(audit.constants.scale) +
               "; diagnostic-sum gap at lambda=1: " +
               fmt(sweep.samples[1].rel_gap_quad_f32));
        if (mode == ConstantsMode::literal)
            c.note("WARN literal-constants mode: closed forms carry scale 1; audit scale " +
                   std::to_string(audit.constants.scale) + " documents the correction");
    }
    return c.finish();
}

} // namespace

bool VerifyReport::all_passed() const {
    for (const auto& cr : criteria)
        if (!cr.passed) return false;
    return true;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    for (const auto& cr : criteria) {
        os << (cr.passed ? "PASS" : "FAIL") << "  [" << cr.id << "] " << cr.label
           << "  (worst " << fmt(cr.worst) << ", tol " << fmt(cr.tolerance) << ")\n";
        if (!cr.details.empty()) os << cr.details;
    }
    os << (all_passed() ? "ALL CRITERIA PASSED\n" : "CRITERIA FAILED\n");
    return os.str();
}

VerifyReport run_acceptance(const VerifyOptions& opts) {
    VerifyReport report;
    report.criteria.push_back(criterion_symbol_cross_validation());
    report.criteria.push_back(criterion_peetre_reduction());
    report.criteria.push_back(criterion_koornwinder());
    report.criteria.push_back(criterion_linearization());
    report.criteria.push_back(criterion_orthonormality(opts.focus));
    report.criteria.push_back(criterion_kernel_agreement());
    report.criteria.push_back(criterion_resolution_identity());
    report.criteria.push_back(criterion_eigenchecks());
    report.criteria.push_back(criterion_invariance());
    report.criteria.push_back(criterion_harmonic_spaces());
    report.criteria.push_back(criterion_diagnostic_record(opts.mode));
    return report;
}

} // namespace bergman
