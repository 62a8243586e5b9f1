#include "extremal/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr int kHaltonPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                 23, 29, 31, 37, 41, 43, 47, 53};

double halton(std::uint64_t index, int base) {
    double result = 0.0;
    double f = 1.0;
    while (index > 0) {
        f /= base;
        result += f * static_cast<double>(index % base);
        index /= base;
    }
    return result;
}

// Scrambled Halton point in [0,1)^dims; strictly inside (0,1) per coordinate.
std::vector<double> halton_point(std::uint64_t index, int dims, std::uint64_t seed) {
    std::vector<double> u(dims);
    for (int d = 0; d < dims; ++d) {
        const double shift =
            static_cast<double>(mix_seed(seed, 0xD0E5ULL + d) >> 11) * 0x1.0p-53;
        double v = halton(index, kHaltonPrimes[d % 16]) + shift;
        v -= std::floor(v);
        u[d] = std::clamp(v, 1e-16, 1.0 - 1e-16);
    }
    return u;
}

Complex unit_from_pair(double u, double v) {
    // area-uniform point of the open unit disc
    const double r = std::sqrt(u);
    const double theta = 2.0 * std::numbers::pi * v;
    return Complex(r * std::cos(theta), r * std::sin(theta));
}

Complex gaussian_from_pair(double u, double v) {
    const double rho = std::sqrt(-2.0 * std::log(u));
    const double theta = 2.0 * std::numbers::pi * v;
    return Complex(rho * std::cos(theta), rho * std::sin(theta));
}

}  // namespace

Domain Domain::ball(AffinePoint center, double radius) {
    if (center.empty() || radius <= 0.0 || !is_finite(center))
        throw ConstraintViolation("ball needs a finite centre and a positive radius");
    Domain d;
    d.shape_ = Shape::Ball;
    d.dim_ = static_cast<int>(center.size());
    d.center_ = std::move(center);
    d.radii_ = {radius};
    return d;
}

Domain Domain::polydisc(AffinePoint center, std::vector<double> radii) {
    if (center.empty() || center.size() != radii.size() || !is_finite(center))
        throw ConstraintViolation("polydisc needs one radius per coordinate");
    for (double r : radii)
        if (r <= 0.0) throw ConstraintViolation("polydisc radii must be positive");
    Domain d;
    d.shape_ = Shape::Polydisc;
    d.dim_ = static_cast<int>(center.size());
    d.center_ = std::move(center);
    d.radii_ = std::move(radii);
    return d;
}

Domain Domain::box(std::vector<double> re_lo, std::vector<double> re_hi,
                   std::vector<double> im_lo, std::vector<double> im_hi) {
    const std::size_t n = re_lo.size();
    if (n == 0 || re_hi.size() != n || im_lo.size() != n || im_hi.size() != n)
        throw ConstraintViolation("box needs four bounds per coordinate");
    for (std::size_t j = 0; j < n; ++j)
        if (!(re_lo[j] < re_hi[j]) || !(im_lo[j] < im_hi[j]))
            throw ConstraintViolation("box intervals must be nonempty");
    Domain d;
    d.shape_ = Shape::Box;
    d.dim_ = static_cast<int>(n);
    d.re_lo_ = std::move(re_lo);
    d.re_hi_ = std::move(re_hi);
    d.im_lo_ = std::move(im_lo);
    d.im_hi_ = std::move(im_hi);
    return d;
}

Domain Domain::annulus(Complex center, double inner_radius, double outer_radius) {
    if (!(0.0 < inner_radius) || !(inner_radius < outer_radius))
        throw ConstraintViolation("annulus needs 0 < inner < outer radius");
    Domain d;
    d.shape_ = Shape::Annulus;
    d.dim_ = 1;
    d.center_ = {center};
    d.radii_ = {outer_radius};
    d.annulus_inner_ = inner_radius;
    return d;
}

Domain Domain::fullspace(int dimension) {
    if (dimension < 1) throw ConstraintViolation("dimension must be >= 1");
    Domain d;
    d.shape_ = Shape::Fullspace;
    d.dim_ = dimension;
    return d;
}

Domain Domain::generic(int dimension, Generic spec) {
    if (dimension < 1 || !spec.member)
        throw ConstraintViolation("generic domain needs a dimension and a membership test");
    if (spec.proposal_lo.size() != static_cast<std::size_t>(2 * dimension) ||
        spec.proposal_hi.size() != static_cast<std::size_t>(2 * dimension))
        throw ConstraintViolation("generic domain needs a proposal box of 2*dim bounds");
    Domain d;
    d.shape_ = Shape::Generic;
    d.dim_ = dimension;
    d.generic_ = std::make_shared<const Generic>(std::move(spec));
    return d;
}

bool Domain::bounded() const {
    return shape_ == Shape::Ball || shape_ == Shape::Polydisc || shape_ == Shape::Box ||
           shape_ == Shape::Annulus;
}

bool Domain::connected() const {
    if (shape_ == Shape::Generic) return generic_->connected;
    return true;
}

bool Domain::contains(const AffinePoint& z) const {
    if (static_cast<int>(z.size()) != dim_)
        throw ConstraintViolation("point dimension does not match the domain");
    switch (shape_) {
        case Shape::Ball:
            return distance(z, center_) < radii_[0];
        case Shape::Polydisc:
            for (int j = 0; j < dim_; ++j)
                if (!(std::abs(z[j] - center_[j]) < radii_[j])) return false;
            return true;
        case Shape::Box:
            for (int j = 0; j < dim_; ++j) {
                if (!(re_lo_[j] < z[j].real() && z[j].real() < re_hi_[j])) return false;
                if (!(im_lo_[j] < z[j].imag() && z[j].imag() < im_hi_[j])) return false;
            }
            return true;
        case Shape::Annulus: {
            const double rho = std::abs(z[0] - center_[0]);
            return annulus_inner_ < rho && rho < radii_[0];
        }
        case Shape::Fullspace:
            return true;
        case Shape::Generic:
            return generic_->member(z);
    }
    return false;
}

double Domain::boundary_distance(const AffinePoint& w) const {
    if (!contains(w)) throw PointNotInDomain("boundary_distance: point is not in the domain");
    switch (shape_) {
        case Shape::Ball:
            return radii_[0] - distance(w, center_);
        case Shape::Polydisc: {
            double d = kInf;
            for (int j = 0; j < dim_; ++j)
                d = std::min(d, radii_[j] - std::abs(w[j] - center_[j]));
            return d;
        }
        case Shape::Box: {
            double d = kInf;
            for (int j = 0; j < dim_; ++j) {
                d = std::min({d, w[j].real() - re_lo_[j], re_hi_[j] - w[j].real(),
                              w[j].imag() - im_lo_[j], im_hi_[j] - w[j].imag()});
            }
            return d;
        }
        case Shape::Annulus: {
            const double rho = std::abs(w[0] - center_[0]);
            return std::min(rho - annulus_inner_, radii_[0] - rho);
        }
        case Shape::Fullspace:
            return kInf;
        case Shape::Generic:
            return generic_->distance_lower_bound ? generic_->distance_lower_bound(w) : 0.0;
    }
    return 0.0;
}

std::vector<AffinePoint> Domain::sample(int k, std::uint64_t seed) const {
    if (k < 1) throw ConstraintViolation("sample count must be >= 1");
    std::vector<AffinePoint> points;
    points.reserve(k);
    const int dims = 2 * dim_;
    std::uint64_t index = 1;
    std::uint64_t attempts = 0;

    while (static_cast<int>(points.size()) < k) {
        if (++attempts > 1000000)
            throw SamplingFailure("rejection sampling exceeded 10^6 attempts");
        const auto u = halton_point(index++, dims, seed);
        AffinePoint z(dim_);
        switch (shape_) {
            case Shape::Ball:
                for (int j = 0; j < dim_; ++j)
                    z[j] = center_[j] + radii_[0] * unit_from_pair(u[2 * j], u[2 * j + 1]);
                if (dim_ > 1 && !contains(z)) continue;  // polydisc envelope, reject
                break;
            case Shape::Polydisc:
                for (int j = 0; j < dim_; ++j)
                    z[j] = center_[j] + radii_[j] * unit_from_pair(u[2 * j], u[2 * j + 1]);
                break;
            case Shape::Box:
                for (int j = 0; j < dim_; ++j)
                    z[j] = Complex(re_lo_[j] + u[2 * j] * (re_hi_[j] - re_lo_[j]),
                                   im_lo_[j] + u[2 * j + 1] * (im_hi_[j] - im_lo_[j]));
                break;
            case Shape::Annulus: {
                const double r2 = annulus_inner_ * annulus_inner_ +
                                  u[0] * (radii_[0] * radii_[0] - annulus_inner_ * annulus_inner_);
                const double theta = 2.0 * std::numbers::pi * u[1];
                z[0] = center_[0] + std::sqrt(r2) * Complex(std::cos(theta), std::sin(theta));
                break;
            }
            case Shape::Fullspace:
                for (int j = 0; j < dim_; ++j)
                    z[j] = gaussian_from_pair(u[2 * j], u[2 * j + 1]);
                break;
            case Shape::Generic: {
                for (int j = 0; j < dim_; ++j) {
                    const double re = generic_->proposal_lo[2 * j] +
                                      u[2 * j] * (generic_->proposal_hi[2 * j] -
                                                  generic_->proposal_lo[2 * j]);
                    const double im = generic_->proposal_lo[2 * j + 1] +
                                      u[2 * j + 1] * (generic_->proposal_hi[2 * j + 1] -
                                                      generic_->proposal_lo[2 * j + 1]);
                    z[j] = Complex(re, im);
                }
                if (!generic_->member(z)) continue;
                break;
            }
        }
        points.push_back(std::move(z));
    }
    return points;
}

std::vector<AffinePoint> Domain::sample_near_boundary(int k, std::uint64_t seed,
                                                      double offset) const {
    if (!bounded()) return sample(k, seed);

    std::vector<AffinePoint> points;
    points.reserve(k);
    const int dims = 2 * dim_;
    for (int i = 0; i < k; ++i) {
        const auto u = halton_point(i + 1, dims, mix_seed(seed, 0xB0DAULL));
        AffinePoint z(dim_);
        switch (shape_) {
            case Shape::Ball: {
                // Gaussian direction on the sphere, radius just inside.
                double nrm = 0.0;
                for (int j = 0; j < dim_; ++j) {
                    z[j] = gaussian_from_pair(u[2 * j], u[2 * j + 1]);
                    nrm += std::norm(z[j]);
                }
                nrm = std::max(std::sqrt(nrm), 1e-20);
                for (int j = 0; j < dim_; ++j)
                    z[j] = center_[j] + (radii_[0] - offset) * z[j] / nrm;
                break;
            }
            case Shape::Polydisc: {
                const int face = i % dim_;
                for (int j = 0; j < dim_; ++j) {
                    if (j == face) {
                        const double theta = 2.0 * std::numbers::pi * u[2 * j];
                        z[j] = center_[j] + (radii_[j] - offset) *
                                                Complex(std::cos(theta), std::sin(theta));
                    } else {
                        z[j] = center_[j] + radii_[j] * unit_from_pair(u[2 * j], u[2 * j + 1]);
                    }
                }
                break;
            }
            case Shape::Box: {
                const int face = i % (4 * dim_);
                const int coord = face / 4;
                for (int j = 0; j < dim_; ++j)
                    z[j] = Complex(re_lo_[j] + u[2 * j] * (re_hi_[j] - re_lo_[j]),
                                   im_lo_[j] + u[2 * j + 1] * (im_hi_[j] - im_lo_[j]));
                switch (face % 4) {
                    case 0: z[coord].real(re_lo_[coord] + offset); break;
                    case 1: z[coord].real(re_hi_[coord] - offset); break;
                    case 2: z[coord].imag(im_lo_[coord] + offset); break;
                    default: z[coord].imag(im_hi_[coord] - offset); break;
                }
                break;
            }
            case Shape::Annulus: {
                const double rho =
                    (i % 2 == 0) ? annulus_inner_ + offset : radii_[0] - offset;
                const double theta = 2.0 * std::numbers::pi * u[0];
                z[0] = center_[0] + rho * Complex(std::cos(theta), std::sin(theta));
                break;
            }
            default:
                break;
        }
        points.push_back(std::move(z));
    }
    return points;
}

Domain Domain::parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte, {"json"});
    }
    try {
        const std::string shape = j.at("shape").get<std::string>();
        const int dim = j.value("dim", 1);
        const auto get_center = [&](int expected) {
            AffinePoint c(expected, Complex(0.0, 0.0));
            if (!j.contains("center")) return c;
            const auto& arr = j.at("center");
            if (!arr.is_array() || static_cast<int>(arr.size()) != expected)
                throw ConstraintViolation("center must list one [re, im] pair per coordinate");
            for (int i = 0; i < expected; ++i)
                c[i] = Complex(arr[i].at(0).get<double>(), arr[i].at(1).get<double>());
            return c;
        };
        if (shape == "ball")
            return ball(get_center(dim), j.at("radius").get<double>());
        if (shape == "polydisc")
            return polydisc(get_center(dim), j.at("radii").get<std::vector<double>>());
        if (shape == "box")
            return box(j.at("re_lo").get<std::vector<double>>(),
                       j.at("re_hi").get<std::vector<double>>(),
                       j.at("im_lo").get<std::vector<double>>(),
                       j.at("im_hi").get<std::vector<double>>());
        if (shape == "annulus") {
            const AffinePoint c = get_center(1);
            return annulus(c[0], j.at("inner").get<double>(), j.at("outer").get<double>());
        }
        if (shape == "fullspace") return fullspace(dim);
        throw ConstraintViolation("unknown shape: " + shape);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad domain spec: ") + e.what(), 0,
                         {"shape", "dim", "center", "radius", "radii", "inner", "outer",
                          "re_lo", "re_hi", "im_lo", "im_hi"});
    } catch (const ConstraintViolation& e) {
        throw ParseError(std::string("bad domain spec: ") + e.what(), 0, {"shape"});
    }
}

}  // namespace extremal
