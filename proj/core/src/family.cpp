#include "extremal/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "extremal/errors.hpp"
#include "extremal/optim.hpp"

namespace extremal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRhoFloor = 1e-6;  // smallest searched radius fraction

double separation(const FamilyDiscParams& p) { return distance(p.z, p.w); }

}  // namespace

bool family_params_feasible(const FamilyDiscParams& p, const Domain& X) {
    if (p.z.size() != p.w.size() || p.r <= 0.0) return false;
    if (!X.contains(p.w)) return false;
    const double s = separation(p);
    if (!(s > 0.0)) return false;
    return p.r < std::min(s, X.boundary_distance(p.w));
}

RationalDisc family_disc(const FamilyDiscParams& p) {
    const double s = separation(p);
    if (p.z.size() != p.w.size() || !(s > 0.0))
        throw ConstraintViolation("family disc needs w distinct from z");
    if (!(p.r > 0.0) || !(p.r < s))
        throw ConstraintViolation("family disc needs 0 < r < ||z - w||");

    const std::size_t n = p.z.size();
    std::vector<Poly> components(n + 1);
    components[0] = {Complex(p.r, 0.0), Complex(s, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
        const Complex dir = (p.z[i] - p.w[i]) / s;
        components[i + 1] = {p.w[i] * p.r + s * p.r * dir, p.w[i] * s + p.r * p.r * dir};
    }
    return make_rational_disc(std::move(components));
}

AffinePoint family_boundary_point(const FamilyDiscParams& p, Complex zeta) {
    const double s = separation(p);
    const Complex ratio = (s + p.r * zeta) / (p.r + s * zeta);
    AffinePoint out(p.z.size());
    for (std::size_t i = 0; i < p.z.size(); ++i)
        out[i] = p.w[i] + ratio * (p.r / s) * (p.z[i] - p.w[i]);
    return out;
}

double family_j_term(const FamilyDiscParams& p) {
    return std::log(separation(p) / p.r);
}

WeightedDiscValue j_q_family(const FamilyDiscParams& p, const Weight& q,
                             const QuadratureRule& rule) {
    WeightedDiscValue out;
    if (q.is_constant()) {
        const Weight::Value c = q.constant_value();
        out.value = family_j_term(p) + c.value;
        out.clipped = c.clipped;
        return out;
    }
    double sum = 0.0;
    for (const Complex& node : rule.nodes()) {
        const Weight::Value v = q(family_boundary_point(p, node));
        out.clipped = out.clipped || v.clipped;
        sum += v.value;
    }
    out.value = family_j_term(p) + sum * rule.weight();
    return out;
}

WeightedDiscValue j_q_family_adaptive(const FamilyDiscParams& p, const Weight& q,
                                      int n0, double tol, int n_cap) {
    WeightedDiscValue out;
    if (q.is_constant()) {
        const Weight::Value c = q.constant_value();
        out.value = family_j_term(p) + c.value;
        out.clipped = c.clipped;
        return out;
    }
    bool clipped = false;
    const auto mean = adaptive_circle_mean(
        [&](Complex zeta) {
            const Weight::Value v = q(family_boundary_point(p, zeta));
            clipped = clipped || v.clipped;
            return v.value;
        },
        n0, tol, n_cap);
    out.value = family_j_term(p) + mean.value;
    out.clipped = clipped;
    return out;
}

namespace {

// Search state for one envelope query: minimizes the family functional over
// (w, rho) with r = rho * min(||z-w||, d(w, bd X)).
class EnvelopeSearch {
public:
    EnvelopeSearch(const AffinePoint& z, const Domain& X, const Weight& q,
                   const SearchConfig& cfg)
        : z_(z), X_(X), q_(q), cfg_(cfg), constant_(q.is_constant()) {}

    EnvelopeResult run() {
        EnvelopeResult result;
        result.value = kInf;

        if (X_.contains(z_)) {
            const Weight::Value qz = q_(z_);
            result.value = qz.value;
            result.clipped = qz.clipped;
            result.constant_witness = true;
            ++evaluations_;
        }

        const std::vector<AffinePoint> starts = start_points();
        const int dims = 2 * static_cast<int>(z_.size());

        for (const AffinePoint& w0 : starts) {
            RealVec x0(dims);
            for (std::size_t j = 0; j < z_.size(); ++j) {
                x0[2 * j] = w0[j].real();
                x0[2 * j + 1] = w0[j].imag();
            }
            double scale = 0.25;
            if (X_.bounded() && X_.contains(w0))
                scale = std::max(0.05 * X_.boundary_distance(w0), 1e-4);

            const auto objective = [&](const RealVec& x) { return value_at(unpack(x)); };
            const OptimResult local =
                nelder_mead_min(objective, x0, scale, cfg_.refine_steps);
            evaluations_ += local.evaluations;

            if (local.value < best_value_) {
                best_value_ = local.value;
                best_w_ = unpack(local.x);
            }
        }

        if (best_value_ < result.value && !best_w_.empty()) {
            // recover the radius fraction behind the best value
            const auto [rho, value] = best_rho(best_w_);
            const double m = feasible_cap(best_w_);
            if (m > 0.0 && value <= result.value) {
                result.value = value;
                result.constant_witness = false;
                result.witness = FamilyDiscParams{z_, best_w_, rho * m};
                result.clipped = result.clipped || clipped_;
            }
        }
        result.evaluations = evaluations_;
        return result;
    }

private:
    AffinePoint unpack(const RealVec& x) const {
        AffinePoint w(z_.size());
        for (std::size_t j = 0; j < z_.size(); ++j)
            w[j] = Complex(x[2 * j], x[2 * j + 1]);
        return w;
    }

    // min(||z-w||, d(w, bd X)) when w is admissible, else 0
    double feasible_cap(const AffinePoint& w) const {
        if (!X_.contains(w)) return 0.0;
        const double s = distance(z_, w);
        if (!(s > 0.0)) return 0.0;
        double cap = std::min(s, X_.boundary_distance(w));
        if (!X_.bounded()) {
            const double reach = cfg_.r_search_factor * (1.0 + norm(z_));
            if (distance(z_, w) > reach) return 0.0;
        }
        return cap;
    }

    double value_for(const AffinePoint& w, double rho, double m) {
        ++evaluations_;
        const double s = distance(z_, w);
        const double r = rho * m;
        if (!(r > 0.0)) return kInf;
        const FamilyDiscParams p{z_, w, r};
        if (constant_) {
            const Weight::Value c = q_.constant_value();
            clipped_ = clipped_ || c.clipped;
            return std::log(s / r) + c.value;
        }
        const WeightedDiscValue v = j_q_family_adaptive(p, q_, 64, 1e-8, 4096);
        clipped_ = clipped_ || v.clipped;
        return v.value;
    }

    std::pair<double, double> best_rho(const AffinePoint& w) {
        const double m = feasible_cap(w);
        if (m <= 0.0) return {0.0, kInf};
        if (constant_) return {cfg_.rho_cap, value_for(w, cfg_.rho_cap, m)};
        // search in t = log(1 - rho): the optimum often sits at the cap
        const double t_lo = std::log(1.0 - cfg_.rho_cap);
        const double t_hi = std::log(1.0 - kRhoFloor);
        const auto g = [&](double t) { return value_for(w, 1.0 - std::exp(t), m); };
        const OptimResult r = golden_section_min(g, t_lo, t_hi, 32);
        return {1.0 - std::exp(r.x[0]), r.value};
    }

    double value_at(const AffinePoint& w) {
        const double m = feasible_cap(w);
        if (m <= 0.0) return kInf;
        return best_rho(w).second;
    }

    std::vector<AffinePoint> start_points() const {
        const std::uint64_t seed = mix_seed(cfg_.seed, hash_point(z_));
        if (X_.bounded() || X_.shape() == Domain::Shape::Generic)
            return X_.sample(cfg_.starts, seed);
        // unbounded: Gaussian cloud around z within the search reach
        const double reach = cfg_.r_search_factor * (1.0 + norm(z_));
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, reach / 4.0);
        std::vector<AffinePoint> pts(cfg_.starts, AffinePoint(z_.size()));
        for (auto& w : pts)
            for (std::size_t j = 0; j < z_.size(); ++j)
                w[j] = z_[j] + Complex(gauss(rng), gauss(rng));
        return pts;
    }

    const AffinePoint& z_;
    const Domain& X_;
    const Weight& q_;
    const SearchConfig& cfg_;
    const bool constant_;

    double best_value_ = kInf;
    AffinePoint best_w_;
    long evaluations_ = 0;
    bool clipped_ = false;
};

}  // namespace

EnvelopeResult envelope_EB(const AffinePoint& z, const Domain& X, const Weight& q,
                           const SearchConfig& cfg) {
    if (static_cast<int>(z.size()) != X.dimension())
        throw ConstraintViolation("query point dimension does not match the domain");
    return EnvelopeSearch(z, X, q, cfg).run();
}

}  // namespace extremal
