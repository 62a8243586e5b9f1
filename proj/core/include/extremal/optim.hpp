#pragma once

#include <functional>
#include <random>
#include <vector>

namespace extremal {

using RealVec = std::vector<double>;
using Objective = std::function<double(const RealVec&)>;

struct OptimResult {
    RealVec x;
    double value = 0.0;
    long evaluations = 0;
};

/// Golden-section minimization on [a, b]; f may return +inf.
OptimResult golden_section_min(const std::function<double(double)>& f, double a,
                               double b, int iterations);

/// Nelder-Mead simplex descent from x0 with initial step `scale` per
/// coordinate. Infeasible points may be signalled with +inf. Deterministic
/// given the generator state. First-found minimum wins on ties.
OptimResult nelder_mead_min(const Objective& f, const RealVec& x0, double scale,
                            int iterations);

/// Nelder-Mead ascent (maximization) wrapper.
OptimResult nelder_mead_max(const Objective& f, const RealVec& x0, double scale,
                            int iterations);

}  // namespace extremal
