#pragma once

#include <functional>
#include <vector>

#include "extremal/types.hpp"

namespace extremal {

/// Uniform quadrature on the unit circle: nodes are the N-th roots of unity
/// with equal weights 1/N. For periodic integrands this trapezoidal rule is
/// spectrally accurate. N must be a power of two, N >= 8.
class QuadratureRule {
public:
    static QuadratureRule uniform(int node_count);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const std::vector<Complex>& nodes() const { return nodes_; }
    double weight() const { return 1.0 / static_cast<double>(nodes_.size()); }

private:
    explicit QuadratureRule(std::vector<Complex> nodes) : nodes_(std::move(nodes)) {}
    std::vector<Complex> nodes_;
};

struct AdaptiveMean {
    double value = 0.0;
    int nodes_used = 0;
    bool converged = false;
};

/// Mean of f over the unit circle, doubling the node count from n0 until two
/// successive means differ by less than tol, capped at n_cap. Node values are
/// reused across doublings.
AdaptiveMean adaptive_circle_mean(const std::function<double(Complex)>& f,
                                  int n0 = 256, double tol = 1e-8, int n_cap = 8192);

}  // namespace extremal
