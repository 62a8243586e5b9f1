#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "extremal/domain.hpp"
#include "extremal/polynomial.hpp"
#include "extremal/quadrature.hpp"
#include "extremal/types.hpp"
#include "extremal/weight.hpp"

namespace extremal {

// Tolerances for disc validation and the disc functionals.
inline constexpr double kCommonZeroTol = 1e-10;   // joint vanishing threshold
inline constexpr double kCircleTol = 1e-9;        // min |f0| allowed on the circle
inline constexpr double kClusterRadius = 1e-6;    // root clustering radius
inline constexpr double kZeroFloor = 1e-300;      // crossings at the centre count as +inf
inline constexpr double kInequalityTol = 1e-6;

/// A zero of f0 inside the unit disc, i.e. a preimage of the hyperplane at
/// infinity, with its multiplicity.
struct HyperplaneCrossing {
    Complex location;
    int multiplicity = 1;
};

/// A closed analytic disc in P^n with polynomial homogeneous components
/// [f0 : f1 : ... : fn]. Validated so that the components have no common
/// zero on the closed unit disc and f0 does not vanish on the circle; in
/// particular the boundary circle maps into C^n.
///
/// Components are stored jointly rescaled so the largest coefficient modulus
/// is 1. This leaves the projective map, the crossings, and both disc
/// functionals unchanged while making the validation tolerances meaningful.
class RationalDisc {
public:
    const std::vector<Poly>& components() const { return components_; }
    const Poly& f0() const { return components_[0]; }

    /// Complex dimension n of the affine target.
    int dimension() const { return static_cast<int>(components_.size()) - 1; }

    /// Maximum component degree.
    int degree() const { return degree_; }

private:
    friend RationalDisc make_rational_disc(std::vector<Poly> components);
    RationalDisc(std::vector<Poly> components, int degree)
        : components_(std::move(components)), degree_(degree) {}

    std::vector<Poly> components_;
    int degree_ = 0;
};

/// Validates and normalizes the components. Throws CommonZeroOnDisc if all
/// components vanish somewhere on the closed unit disc, CircleCrossesInfinity
/// if f0 has a zero on (or within kCircleTol of) the unit circle, and
/// ConstraintViolation on malformed input.
RationalDisc make_rational_disc(std::vector<Poly> components);

/// The constant disc k_x at a point x of C^n.
RationalDisc constant_disc(const AffinePoint& x);

/// f evaluated at zeta: the affine point (f1/f0, ..., fn/f0), or nullopt when
/// the value lies on the hyperplane at infinity.
std::optional<AffinePoint> evaluate_disc(const RationalDisc& f, Complex zeta);

/// Zeros of f0 strictly inside the unit disc, clustered into multiplicities:
/// roots within kClusterRadius of each other merge, the cluster size is the
/// multiplicity and the centroid is the reported location.
std::vector<HyperplaneCrossing> hyperplane_preimages(const RationalDisc& f);
std::vector<HyperplaneCrossing> unit_disc_crossings(const Poly& f0);

/// J(f) = -sum m * log|a| over the crossings; 0 when there are none, +inf
/// when a crossing sits at the centre of the disc.
double j_functional(const RationalDisc& f);
double j_from_crossings(const std::vector<HyperplaneCrossing>& crossings);

/// J(f) computed through Jensen's formula as
///   mean of log|f0| over the circle - log|f0(0)|,
/// with no root finding. Throws CenterAtInfinity when f0(0) is (numerically)
/// zero.
double j_via_jensen(const RationalDisc& f, const QuadratureRule& rule);

/// Blaschke factorization data of f0 = B * g0 with B the Blaschke product
/// over the unit-disc zeros and g0 zero-free near the closed disc:
/// outer_value_at_zero = log|g0(0)| = log|f0(0)| - sum m log|a|, which equals
/// the circle mean of log|f0|.
struct BlaschkeDecomposition {
    std::vector<HyperplaneCrossing> crossings;
    double outer_value_at_zero = 0.0;
};

BlaschkeDecomposition blaschke_decompose(const Poly& f0);

/// A scalar field on (a subset of) C^n. `domain` may be empty, meaning the
/// whole space.
struct ScalarField {
    std::function<double(const AffinePoint&)> value;
    std::function<bool(const AffinePoint&)> domain;
};

struct CircleMean {
    double value = 0.0;
    bool clipped = false;
};

/// Mean of the field over f(circle) against the uniform measure on the
/// parameter circle. Field values below kWeightFloor are clipped there and
/// flagged. Throws DomainViolation when a node image leaves the field's
/// domain and CircleCrossesInfinity when a node image is at infinity.
CircleMean circle_mean(const ScalarField& field, const RationalDisc& f,
                       const QuadratureRule& rule);

struct WeightedDiscValue {
    double value = 0.0;
    bool clipped = false;
};

/// J_q(f) = J(f) + the partial circle mean of q over the nodes whose images
/// lie in X. When J(f) = +inf the result is +inf regardless of the integral.
WeightedDiscValue j_q(const RationalDisc& f, const Weight& q, const Domain& X,
                      const QuadratureRule& rule);

}  // namespace extremal
