#include "extremal/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "extremal/errors.hpp"

namespace extremal {

QuadratureRule QuadratureRule::uniform(int node_count) {
    if (node_count < 8 || (node_count & (node_count - 1)) != 0)
        throw ConstraintViolation("quadrature node count must be a power of two >= 8");
    std::vector<Complex> nodes(node_count);
    for (int k = 0; k < node_count; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / node_count;
        nodes[k] = Complex(std::cos(theta), std::sin(theta));
    }
    return QuadratureRule(std::move(nodes));
}

AdaptiveMean adaptive_circle_mean(const std::function<double(Complex)>& f, int n0,
                                  double tol, int n_cap) {
    int n = n0;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n;
        sum += f(Complex(std::cos(theta), std::sin(theta)));
    }
    double mean = sum / n;

    AdaptiveMean out;
    while (n < n_cap) {
        // the odd nodes of the doubled rule
        double odd_sum = 0.0;
        for (int k = 0; k < n; ++k) {
            const double theta = std::numbers::pi * (2 * k + 1) / n;
            odd_sum += f(Complex(std::cos(theta), std::sin(theta)));
        }
        sum += odd_sum;
        n *= 2;
        const double next = sum / n;
        const bool stable = std::abs(next - mean) < tol;
        mean = next;
        if (stable) {
            out.converged = true;
            break;
        }
    }
    out.value = mean;
    out.nodes_used = n;
    if (n >= n_cap && !out.converged) out.converged = false;
    return out;
}

}  // namespace extremal
