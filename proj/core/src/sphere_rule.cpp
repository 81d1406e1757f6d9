#include "bergman/sphere_rule.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/quadrature.hpp"

namespace bergman {

AngularRule sphere_product_rule(int n, int radial_points, int phase_points) {
    if (n < 2) throw std::invalid_argument("sphere_product_rule: n >= 2");
    if (radial_points < 1 || phase_points < 1)
        throw std::invalid_argument("sphere_product_rule: positive node counts required");

    // moduli: (|theta_1|^2, ..., |theta_n|^2) uniform on the simplex,
    // factored through nested Beta(1, n-j) variables
    std::vector<std::vector<double>> s_configs{{}};
    std::vector<double> s_weights{1.0};
    for (int level = 1; level <= n - 1; ++level) {
        QuadratureRule rule = gauss_jacobi_rule(radial_points, 0.0, double(n - 1 - level));
        double norm = double(n - level); // 1 / B(1, n-level)
        std::vector<std::vector<double>> next_cfg;
        std::vector<double> next_w;
        for (size_t i = 0; i < s_configs.size(); ++i) {
            double remaining = 1.0;
            for (double s : s_configs[i]) remaining -= s;
            for (size_t k = 0; k < rule.nodes.size(); ++k) {
                std::vector<double> cfg = s_configs[i];
                cfg.push_back(remaining * rule.nodes[k]);
                next_cfg.push_back(std::move(cfg));
                next_w.push_back(s_weights[i] * rule.weights[k] * norm);
            }
        }
        s_configs = std::move(next_cfg);
        s_weights = std::move(next_w);
    }
    for (auto& cfg : s_configs) {
        double rem = 1.0;
        for (double s : cfg) rem -= s;
        cfg.push_back(std::max(rem, 0.0));
    }

    // phases: midpoint (trapezoid) nodes on each coordinate circle
    const double two_pi = 6.28318530717958647692;
    std::vector<double> phases(phase_points);
    for (int k = 0; k < phase_points; ++k)
        phases[k] = two_pi * (k + 0.5) / phase_points;

    AngularRule out;
    out.n = n;
    std::vector<int> idx(n, 0);
    const double phase_w = 1.0 / std::pow(double(phase_points), n);
    for (size_t si = 0; si < s_configs.size(); ++si) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<std::complex<double>> theta(n);
            for (int j = 0; j < n; ++j) {
                double r = std::sqrt(s_configs[si][j]);
                theta[j] = std::polar(r, phases[idx[j]]);
            }
            out.nodes.push_back(std::move(theta));
            out.weights.push_back(s_weights[si] * phase_w);
            int j = n - 1;
            while (j >= 0 && ++idx[j] == phase_points) idx[j--] = 0;
            if (j < 0) break;
        }
    }
    double total = 0.0;
    for (double w : out.weights) total += w;
    for (double& w : out.weights) w /= total;
    return out;
}

} // namespace bergman
