#pragma once

#include <cstdint>
#include <optional>

#include "extremal/disc.hpp"
#include "extremal/domain.hpp"
#include "extremal/weight.hpp"

namespace extremal {

/// Parameters of the Moebius-type disc f_{z,w,r}: centre image z, circle
/// centre w in X, image-circle radius r with
/// 0 < r < min(||z - w||, d(w, boundary X)).
struct FamilyDiscParams {
    AffinePoint z;
    AffinePoint w;
    double r = 0.0;
};

struct SearchConfig {
    int starts = 64;
    int refine_steps = 200;
    double rho_cap = 1.0 - 1e-6;       // r = rho * min(||z-w||, d(w, bd X))
    double r_search_factor = 10.0;     // w-search radius factor for unbounded X
    std::uint64_t seed = 0;
};

bool family_params_feasible(const FamilyDiscParams& p, const Domain& X);

/// The disc itself, as the degree-1 rational disc
///   [ r + ||z-w|| zeta : components of w (r + ||z-w|| zeta)
///                        + (||z-w|| + r zeta) (r/||z-w||)(z - w) ].
/// Maps 0 to z, the circle onto the circle of centre w and radius r, and has
/// its single hyperplane crossing at -r/||z-w||. Throws ConstraintViolation
/// when the parameter invariants fail (w = z or r out of range is checked
/// against X when X is supplied via family_params_feasible).
RationalDisc family_disc(const FamilyDiscParams& p);

/// Boundary point f_{z,w,r}(zeta) for |zeta| = 1, by the closed formula.
AffinePoint family_boundary_point(const FamilyDiscParams& p, Complex zeta);

/// log(||z-w|| / r), the J term of the family disc.
double family_j_term(const FamilyDiscParams& p);

/// J_q of the family disc in closed form: log(||z-w||/r) plus the circle
/// mean of q on the image circle (computed at the given rule's nodes).
WeightedDiscValue j_q_family(const FamilyDiscParams& p, const Weight& q,
                             const QuadratureRule& rule);

/// Same value with the weight mean computed adaptively (doubling nodes until
/// stable); used by the envelope search.
WeightedDiscValue j_q_family_adaptive(const FamilyDiscParams& p, const Weight& q,
                                      int n0 = 64, double tol = 1e-8, int n_cap = 8192);

struct EnvelopeResult {
    double value = 0.0;
    bool constant_witness = false;              // witness is the constant disc at z
    std::optional<FamilyDiscParams> witness;    // set unless constant_witness
    long evaluations = 0;
    bool clipped = false;
};

/// Envelope of J_q over the good family: the infimum of j_q_family over
/// feasible (w, r), min'd with q(z) for the constant disc when z lies in X.
/// Multistart derivative-free search, deterministic given cfg.seed and z.
/// The result is an upper bound for the true envelope and decreases with the
/// search budget.
EnvelopeResult envelope_EB(const AffinePoint& z, const Domain& X, const Weight& q,
                           const SearchConfig& cfg);

}  // namespace extremal
