#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "extremal/types.hpp"

namespace extremal {

/// An open connected subset of C^n. The closed shapes carry exact boundary
/// distances; GENERIC domains are user predicates with a declared lower bound
/// on the boundary distance and a trusted connectedness flag.
class Domain {
public:
    enum class Shape { Ball, Polydisc, Box, Annulus, Fullspace, Generic };

    struct Generic {
        std::function<bool(const AffinePoint&)> member;
        std::function<double(const AffinePoint&)> distance_lower_bound;
        bool connected = true;
        // rejection-sampling proposal box, [lo, hi] per real coordinate
        // (re z1, im z1, re z2, ...)
        std::vector<double> proposal_lo, proposal_hi;
    };

    static Domain ball(AffinePoint center, double radius);
    static Domain polydisc(AffinePoint center, std::vector<double> radii);
    /// Box of per-coordinate rectangles: re z_j in (re_lo[j], re_hi[j]),
    /// im z_j in (im_lo[j], im_hi[j]).
    static Domain box(std::vector<double> re_lo, std::vector<double> re_hi,
                      std::vector<double> im_lo, std::vector<double> im_hi);
    static Domain annulus(Complex center, double inner_radius, double outer_radius);
    static Domain fullspace(int dimension);
    static Domain generic(int dimension, Generic spec);

    /// Parses the JSON domain schema:
    ///   {"shape": "ball"|"polydisc"|"box"|"annulus"|"fullspace", "dim": n, ...}
    /// Throws ParseError on malformed input.
    static Domain parse_json(const std::string& text);

    Shape shape() const { return shape_; }
    int dimension() const { return dim_; }
    bool bounded() const;
    bool connected() const;

    /// Strict interior membership.
    bool contains(const AffinePoint& z) const;

    /// Euclidean distance from w to the boundary; +inf for the full space, a
    /// declared lower bound for GENERIC shapes. Throws PointNotInDomain when
    /// w is not in the domain.
    double boundary_distance(const AffinePoint& w) const;

    /// k points of the domain, deterministic given the seed. Bounded shapes
    /// use a scrambled Halton sequence mapped into the shape; the full space
    /// uses Gaussian coordinates. Throws SamplingFailure when rejection
    /// sampling for a GENERIC shape exceeds 10^6 attempts.
    std::vector<AffinePoint> sample(int k, std::uint64_t seed) const;

    /// k points at (approximately) `offset` inside the boundary, used to pin
    /// suprema near the boundary. Falls back to interior samples for shapes
    /// without a closed-form boundary.
    std::vector<AffinePoint> sample_near_boundary(int k, std::uint64_t seed,
                                                  double offset = 1e-9) const;

    // shape accessors (valid only for the matching shape)
    const AffinePoint& center() const { return center_; }
    double radius() const { return radii_[0]; }
    const std::vector<double>& radii() const { return radii_; }
    double inner_radius() const { return annulus_inner_; }
    double outer_radius() const { return radii_[0]; }
    const std::vector<double>& re_lo() const { return re_lo_; }
    const std::vector<double>& re_hi() const { return re_hi_; }
    const std::vector<double>& im_lo() const { return im_lo_; }
    const std::vector<double>& im_hi() const { return im_hi_; }

private:
    Domain() = default;

    Shape shape_ = Shape::Fullspace;
    int dim_ = 1;
    AffinePoint center_;
    std::vector<double> radii_;
    double annulus_inner_ = 0.0;
    std::vector<double> re_lo_, re_hi_, im_lo_, im_hi_;
    std::shared_ptr<const Generic> generic_;
};

}  // namespace extremal
