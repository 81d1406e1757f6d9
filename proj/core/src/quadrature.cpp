#include "bergman/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

// Golub-Welsch on the symmetric Jacobi recurrence for weight
// (1-x)^a (1+x)^b on [-1,1].
void jacobi_nodes_minus1_1(int points, double a, double b,
                           std::vector<double>& x, std::vector<double>& w) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(points, points);
    for (int k = 0; k < points; ++k) {
        double d;
        if (k == 0)
            d = (b - a) / (a + b + 2.0);
        else
            d = (b * b - a * a) / ((2.0 * k + a + b) * (2.0 * k + a + b + 2.0));
        J(k, k) = d;
        if (k + 1 < points) {
            double kk = k + 1.0;
            double num, den;
            if (k == 0) {
                // cancelled form of beta_1 (valid for all alpha+beta > -2)
                num = 4.0 * (1.0 + a) * (1.0 + b);
                den = std::pow(a + b + 2.0, 2) * (a + b + 3.0);
            } else {
                num = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b);
                den = std::pow(2.0 * kk + a + b, 2) * (2.0 * kk + a + b + 1.0) *
                      (2.0 * kk + a + b - 1.0);
            }
            double e = std::sqrt(num / den);
            J(k, k + 1) = e;
            J(k + 1, k) = e;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    double log_mu0 = (a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                     std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0);
    double mu0 = std::exp(log_mu0);
    x.resize(points);
    w.resize(points);
    for (int i = 0; i < points; ++i) {
        x[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        w[i] = mu0 * v0 * v0;
    }
}

const int kPanelOrder = 32;
const int kPanelOrderLow = 16;

struct PanelRules {
    // Legendre rules on [0,1] for the interior panels
    std::vector<double> x32, w32, x16, w16;
    PanelRules() {
        std::vector<double> x, w;
        jacobi_nodes_minus1_1(kPanelOrder, 0.0, 0.0, x, w);
        for (int i = 0; i < kPanelOrder; ++i) {
            x32.push_back(0.5 * (x[i] + 1.0));
            w32.push_back(0.5 * w[i]);
        }
        jacobi_nodes_minus1_1(kPanelOrderLow, 0.0, 0.0, x, w);
        for (int i = 0; i < kPanelOrderLow; ++i) {
            x16.push_back(0.5 * (x[i] + 1.0));
            w16.push_back(0.5 * w[i]);
        }
    }
};

const PanelRules& panel_rules() {
    static const PanelRules rules;
    return rules;
}

template <typename T>
struct Adaptive {
    T value{};
    double error = 0.0;
    int panels = 0;
};

// One panel [lo, hi] strictly inside (0,1]: weight folded into the
// integrand; embedded 16/32 error estimate.
template <typename F, typename T>
void add_panel(const F& f, double a, double b, double lo, double hi, Adaptive<T>& acc,
               T& panel_value) {
    const PanelRules& r = panel_rules();
    T hiv{}, lov{};
    double width = hi - lo;
    for (int i = 0; i < kPanelOrder; ++i) {
        double t = lo + width * r.x32[i];
        double wt = std::pow(t, a) * std::pow(1.0 - t, b) * width * r.w32[i];
        hiv += wt * f(t);
    }
    for (int i = 0; i < kPanelOrderLow; ++i) {
        double t = lo + width * r.x16[i];
        double wt = std::pow(t, a) * std::pow(1.0 - t, b) * width * r.w16[i];
        lov += wt * f(t);
    }
    acc.value += hiv;
    acc.error += std::abs(hiv - lov);
    acc.panels += 1;
    panel_value = hiv;
}

template <typename T, typename F>
Adaptive<T> adaptive_impl(const F& f, double a_exp, double b_exp, double rel_tol,
                          int budget) {
    if (!(a_exp > -1.0) || !(b_exp > -1.0))
        throw std::invalid_argument("integrate_weighted_adaptive: exponents must be > -1");
    Adaptive<T> acc;

    // first panel [0, 1/2] under a Gauss-Jacobi rule in u = 2t, exact in
    // the t^a endpoint factor
    {
        static thread_local std::vector<double> gx, gw;
        static thread_local double cached_a = std::nan("");
        if (!(cached_a == a_exp)) {
            jacobi_nodes_minus1_1(kPanelOrder, a_exp, 0.0, gx, gw);
            cached_a = a_exp;
        }
        // t = (1-x)/4 maps [-1,1] with weight (1-x)^a onto [0,1/2] with
        // weight t^a and carries the 4^{-(a+1)} scale
        T v{};
        for (int i = 0; i < kPanelOrder; ++i) {
            double t = 0.25 * (1.0 - gx[i]);
            double wt = gw[i] * std::pow(0.25, a_exp + 1.0) * std::pow(1.0 - t, b_exp);
            v += wt * f(t);
        }
        acc.value += v;
        acc.panels += 1;
    }

    // geometric panels toward t = 1; oscillatory integrands can make a
    // single panel dip, so the tail bound uses the worst recent ratio and
    // magnitude rather than the last pair
    std::vector<double> mags;
    double edge = 0.5;
    for (int k = 1; k <= budget; ++k) {
        double lo = 1.0 - std::pow(2.0, -double(k));
        double hi = 1.0 - std::pow(2.0, -double(k + 1));
        if (1.0 - hi < 1e-13) break; // endpoint guard band
        T pv{};
        add_panel(f, a_exp, b_exp, lo, hi, acc, pv);
        edge = hi;
        mags.push_back(std::abs(pv));
        double total = std::abs(acc.value);
        if (k >= 4 && mags.size() >= 3) {
            size_t e = mags.size();
            double r = 0.0;
            if (mags[e - 2] > 0.0) r = std::max(r, mags[e - 1] / mags[e - 2]);
            if (mags[e - 3] > 0.0) r = std::max(r, mags[e - 2] / mags[e - 3]);
            double mmax = std::max(mags[e - 1], mags[e - 2]);
            if (r > 0.0 && r < 0.95) {
                double tail_bound = mmax * r / (1.0 - r);
                if (tail_bound + acc.error <= rel_tol * total) {
                    acc.error += tail_bound;
                    return acc;
                }
            } else if (mmax == 0.0 && mags[e - 3] == 0.0) {
                return acc; // integrand support exhausted
            }
        }
    }
    // finish [edge, 1) with a Gauss-Jacobi rule carrying the (1-t)^b
    // endpoint weight exactly; the t^a factor is smooth here
    {
        static thread_local std::vector<double> tx, tw;
        static thread_local double cached_b = std::nan("");
        if (!(cached_b == b_exp)) {
            jacobi_nodes_minus1_1(kPanelOrder, b_exp, 0.0, tx, tw);
            cached_b = b_exp;
        }
        const double h = 1.0 - edge;
        T tail{};
        for (int i = 0; i < kPanelOrder; ++i) {
            // u = (1-x)/2 with weight u^b; t = 1 - h u, kept inside the
            // representable guard band
            double u = 0.5 * (1.0 - tx[i]);
            double t = 1.0 - std::max(h * u, 5e-14);
            double wt = tw[i] * std::pow(0.5, b_exp + 1.0) * std::pow(h, b_exp + 1.0) *
                        std::pow(t, a_exp);
            tail += wt * f(t);
        }
        acc.value += tail;
        acc.panels += 1;
        acc.error += 0.02 * std::abs(tail);
    }
    if (acc.error > std::max(1e-6 * std::abs(acc.value), 1e-300))
        throw convergence_error("integrate_weighted_adaptive: budget exhausted");
    return acc;
}

} // namespace

QuadratureRule gauss_jacobi_rule(int points, double a_exp, double b_exp) {
    if (points < 1) throw std::invalid_argument("gauss_jacobi_rule: points >= 1");
    if (!(a_exp > -1.0) || !(b_exp > -1.0))
        throw std::invalid_argument("gauss_jacobi_rule: exponents must be > -1");
    std::vector<double> x, w;
    jacobi_nodes_minus1_1(points, a_exp, b_exp, x, w);
    QuadratureRule rule;
    rule.t_exponent = a_exp;
    rule.one_minus_t_exponent = b_exp;
    double scale = std::pow(2.0, -(a_exp + b_exp + 1.0));
    // t = (1-x)/2 reverses the ordering; keep nodes ascending in t
    for (int i = points - 1; i >= 0; --i) {
        double t = 0.5 * (1.0 - x[i]);
        t = std::min(t, 1.0 - 1e-12); // guard band
        rule.nodes.push_back(t);
        rule.weights.push_back(scale * w[i]);
    }
    return rule;
}

QuadratureRule radial_rule(int n, double gamma, int points, bool adaptive) {
    if (!(gamma > -1.0))
        throw std::invalid_argument("radial_rule: gamma <= -1 violates integrability");
    QuadratureRule rule = gauss_jacobi_rule(points, double(n - 1), gamma);
    rule.adaptive = adaptive;
    return rule;
}

double beta_moment(double a_exp, double b_exp, int j) {
    return std::exp(std::lgamma(a_exp + 1.0 + j) + std::lgamma(b_exp + 1.0) -
                    std::lgamma(a_exp + b_exp + 2.0 + j));
}

double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f) {
    double s = 0.0, comp = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double term = rule.weights[i] * f(rule.nodes[i]);
        double t = s + term;
        comp += (std::abs(s) >= std::abs(term)) ? (s - t) + term : (term - t) + s;
        s = t;
    }
    return s + comp;
}

AdaptiveResult integrate_weighted_adaptive(const std::function<double(double)>& f,
                                           double a_exp, double b_exp, double rel_tol,
                                           int budget) {
    auto r = adaptive_impl<double>(f, a_exp, b_exp, rel_tol, budget);
    return {r.value, r.error, r.panels};
}

AdaptiveResultC integrate_weighted_adaptive_c(
    const std::function<std::complex<double>(double)>& f, double a_exp, double b_exp,
    double rel_tol, int budget) {
    auto r = adaptive_impl<std::complex<double>>(f, a_exp, b_exp, rel_tol, budget);
    return {r.value, r.error, r.panels};
}

AdaptiveResult integrate_with_rule(const QuadratureRule& rule,
                                   const std::function<double(double)>& f) {
    if (rule.adaptive)
        return integrate_weighted_adaptive(f, rule.t_exponent, rule.one_minus_t_exponent,
                                           rule.target_rel_tol, rule.refinement_budget);
    return {apply_rule(rule, f), 0.0, 1};
}

} // namespace bergman
