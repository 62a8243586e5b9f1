#include "extremal/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace extremal {

OptimResult golden_section_min(const std::function<double(double)>& f, double a,
                               double b, int iterations) {
    constexpr double phi = 0.6180339887498949;
    OptimResult out;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    out.evaluations = 2;
    for (int it = 0; it < iterations; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
        ++out.evaluations;
    }
    if (f1 <= f2) {
        out.x = {x1};
        out.value = f1;
    } else {
        out.x = {x2};
        out.value = f2;
    }
    return out;
}

OptimResult nelder_mead_min(const Objective& f, const RealVec& x0, double scale,
                            int iterations) {
    const std::size_t n = x0.size();
    OptimResult out;

    std::vector<RealVec> simplex(n + 1, x0);
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += scale;
    for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);
    out.evaluations = static_cast<long>(n + 1);

    std::vector<std::size_t> order(n + 1);
    const auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    };

    for (int it = 0; it < iterations; ++it) {
        sort_simplex();
        const std::size_t best = order[0], worst = order[n], second = order[n - 1];

        RealVec centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        const auto affine = [&](double t) {
            RealVec p(n);
            for (std::size_t d = 0; d < n; ++d)
                p[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
            return p;
        };

        RealVec reflected = affine(-1.0);
        const double fr = f(reflected);
        ++out.evaluations;

        if (fr < values[best]) {
            RealVec expanded = affine(-2.0);
            const double fe = f(expanded);
            ++out.evaluations;
            if (fe < fr) {
                simplex[worst] = std::move(expanded);
                values[worst] = fe;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = fr;
            }
        } else if (fr < values[second]) {
            simplex[worst] = std::move(reflected);
            values[worst] = fr;
        } else {
            RealVec contracted = affine(fr < values[worst] ? -0.5 : 0.5);
            const double fc = f(contracted);
            ++out.evaluations;
            if (fc < std::min(values[worst], fr)) {
                simplex[worst] = std::move(contracted);
                values[worst] = fc;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < n; ++d)
                        simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                    values[i] = f(simplex[i]);
                    ++out.evaluations;
                }
            }
        }
    }

    sort_simplex();
    out.x = simplex[order[0]];
    out.value = values[order[0]];
    return out;
}

OptimResult nelder_mead_max(const Objective& f, const RealVec& x0, double scale,
                            int iterations) {
    OptimResult r = nelder_mead_min([&](const RealVec& x) { return -f(x); }, x0, scale, iterations);
    r.value = -r.value;
    return r;
}

}  // namespace extremal
