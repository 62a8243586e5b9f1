#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "extremal/family.hpp"
#include "extremal/lelong.hpp"

namespace extremal {

inline constexpr double kSandwichTol = 1e-6;

/// An analytic disc into C^n with polynomial coefficients,
/// h(zeta) = center + sum_k c_k zeta^k. Entire, so it never crosses the
/// hyperplane at infinity.
struct PoletskyDisc {
    AffinePoint center;
    std::vector<AffinePoint> coefficients;  // c_1 .. c_d

    AffinePoint eval(Complex zeta) const;
    int degree() const { return static_cast<int>(coefficients.size()); }
};

struct SolverConfig {
    int iter = 3;                  // Poletsky iterations
    int disc_degree = 4;           // d_h, degree of searched discs
    double coeff_cap_factor = 8.0; // coefficient cap = factor * (1 + ||z||)
    int lower_degree_max = 4;      // max degree of lower-bound candidates
    int calib_samples = 4096;      // interior calibration samples (plus as many near-boundary)
    std::uint64_t seed = 0;
    enum class Interpolation { Off, Grid } interpolation = Interpolation::Off;

    // search budgets
    SearchConfig family_search{};                       // envelope at the query point
    SearchConfig inner_search{.starts = 8, .refine_steps = 30};  // envelope inside Poletsky means
    int poletsky_starts = 12;
    int poletsky_steps = 40;
    int poletsky_nodes = 64;       // fixed rule while searching discs
    int inner_step_budget = 0;     // starts of nested steps below the query (0: degenerate disc only)
    long eval_cap = 0;             // 0 = unlimited; sets budget_exceeded when hit
    int grid_resolution = 33;      // per real dimension, interpolation mode
};

struct SandwichReport {
    AffinePoint point;
    double lower = 0.0;
    double family_upper = 0.0;
    double poletsky_upper = 0.0;
    double gap = 0.0;
    LelongCandidate lower_witness;
    std::string upper_witness;
    bool clipped = false;
    bool budget_exceeded = false;
    bool interpolated = false;
    std::vector<double> iterates;  // U_m at the query point, non-increasing
    long evaluations = 0;

    bool sandwich_ok() const {
        return lower - kSandwichTol <= poletsky_upper &&
               poletsky_upper <= family_upper + kSandwichTol;
    }
};

/// One Poletsky improvement of an upper-bounded scalar field U at z: the
/// minimum over searched discs h with h(0) = z (degree <= cfg.disc_degree,
/// coefficients capped) of the quadrature mean of U over h(circle). The
/// degenerate disc h = z is always in the search set, so the result never
/// exceeds U(z).
double poletsky_step(const std::function<double(const AffinePoint&)>& U,
                     const AffinePoint& z, const SolverConfig& cfg,
                     const QuadratureRule& rule);

/// Best Lelong-class polynomial subsolution value at z: candidates
/// (1/d) log|P| + c over a pool of monomials, translated linear factors and
/// their products, each offset calibrated so u <= q holds on a large sample
/// of X (interior, near-boundary, and ascent-refined points). A lower bound
/// for V_{X,q}(z) up to the sampling error of the calibration.
std::pair<double, LelongCandidate> lelong_lower_bound(const AffinePoint& z,
                                                      const Domain& X, const Weight& q,
                                                      const SolverConfig& cfg);

/// Computes the full sandwich at query points. Queries are independent and
/// thread-safe; the memoized envelope values are shared between them (entries
/// are deterministic functions of the key, so races are benign).
class Solver {
public:
    Solver(Domain domain, Weight weight, SolverConfig cfg);
    ~Solver();

    SandwichReport solve(const AffinePoint& z) const;

    const Domain& domain() const;
    const Weight& weight() const;
    const SolverConfig& config() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Single-shot convenience wrapper around Solver.
SandwichReport solve_V(const AffinePoint& z, const Domain& X, const Weight& q,
                       const SolverConfig& cfg);

/// Upper-bound refinement over rational discs of component degree <=
/// cfg.disc_degree with f(0) = z and boundary inside X (checked strictly at
/// the quadrature nodes), seeded from the family witness. Returns
/// min(best found, family value).
double direct_disc_refine(const AffinePoint& z, const Domain& X, const Weight& q,
                          const SolverConfig& cfg, const EnvelopeResult& family);

}  // namespace extremal
