#include "extremal/disc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "extremal/domain.hpp"
#include "extremal/errors.hpp"
#include "extremal/weight.hpp"

namespace extremal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_coeff_modulus(const std::vector<Poly>& components) {
    double m = 0.0;
    for (const Poly& p : components)
        for (const Complex& c : p) m = std::max(m, std::abs(c));
    return m;
}

// Trim numerically-zero trailing coefficients before root finding.
Poly trimmed(const Poly& p) {
    double m = 0.0;
    for (const Complex& c : p) m = std::max(m, std::abs(c));
    const int deg = poly_degree(p, 1e-14 * m);
    if (deg < 0) return {};
    return Poly(p.begin(), p.begin() + deg + 1);
}

}  // namespace

RationalDisc make_rational_disc(std::vector<Poly> components) {
    if (components.size() < 2)
        throw ConstraintViolation("a rational disc needs at least 2 components");
    for (Poly& p : components)
        if (p.empty()) p = {Complex(0.0, 0.0)};

    const double scale = max_coeff_modulus(components);
    if (scale <= 0.0)
        throw ConstraintViolation("all disc components are identically zero");
    for (Poly& p : components)
        for (Complex& c : p) c /= scale;

    int degree = 0;
    for (const Poly& p : components) degree = std::max(degree, poly_degree(p, 0.0));

    const Poly f0 = trimmed(components[0]);
    if (f0.empty())
        throw CircleCrossesInfinity("f0 is identically zero; the boundary lies at infinity");

    // min |f0| on a dense circle sample
    const int sample_count = std::max(512, 16 * degree);
    double min_on_circle = kInf;
    for (int k = 0; k < sample_count; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / sample_count;
        min_on_circle = std::min(
            min_on_circle, std::abs(poly_eval(f0, Complex(std::cos(theta), std::sin(theta)))));
    }
    if (min_on_circle <= kCircleTol)
        throw CircleCrossesInfinity("f0 vanishes on the unit circle");

    // A common zero of all components must in particular be a zero of f0.
    if (poly_degree(f0, 0.0) >= 1) {
        for (const Complex& root : poly_roots(f0)) {
            if (std::abs(root) > 1.0) continue;
            double others = 0.0;
            for (std::size_t i = 1; i < components.size(); ++i)
                others = std::max(others, std::abs(poly_eval(components[i], root)));
            if (others <= kCommonZeroTol)
                throw CommonZeroOnDisc("all components vanish inside the closed unit disc");
        }
    }

    return RationalDisc(std::move(components), degree);
}

RationalDisc constant_disc(const AffinePoint& x) {
    std::vector<Poly> components;
    components.reserve(x.size() + 1);
    components.push_back({Complex(1.0, 0.0)});
    for (const Complex& c : x) components.push_back({c});
    return make_rational_disc(std::move(components));
}

std::optional<AffinePoint> evaluate_disc(const RationalDisc& f, Complex zeta) {
    const auto& comps = f.components();
    const Complex denom = poly_eval(comps[0], zeta);

    double scale = 0.0;
    AffinePoint numerators(comps.size() - 1);
    for (std::size_t i = 1; i < comps.size(); ++i) {
        numerators[i - 1] = poly_eval(comps[i], zeta);
        scale = std::max(scale, std::abs(numerators[i - 1]));
    }
    scale = std::max(scale, 1e-30);

    if (std::abs(denom) <= kCircleTol * scale) return std::nullopt;
    for (Complex& c : numerators) c /= denom;
    return numerators;
}

std::vector<HyperplaneCrossing> unit_disc_crossings(const Poly& f0) {
    const Poly p = trimmed(f0);
    if (poly_degree(p, 0.0) < 1) return {};

    std::vector<Complex> inside;
    for (const Complex& r : poly_roots(p))
        if (std::abs(r) < 1.0) inside.push_back(r);
    if (inside.empty()) return {};

    // Transitive clustering: roots within kClusterRadius merge.
    const std::size_t n = inside.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(inside[i] - inside[j]) <= kClusterRadius)
                parent[find(i)] = find(j);

    std::vector<HyperplaneCrossing> crossings;
    for (std::size_t i = 0; i < n; ++i) {
        if (find(i) != i) continue;
        Complex centroid(0.0, 0.0);
        int count = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (find(j) != i) continue;
            centroid += inside[j];
            ++count;
        }
        crossings.push_back({centroid / static_cast<double>(count), count});
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const HyperplaneCrossing& a, const HyperplaneCrossing& b) {
                  if (a.location.real() != b.location.real())
                      return a.location.real() < b.location.real();
                  return a.location.imag() < b.location.imag();
              });
    return crossings;
}

std::vector<HyperplaneCrossing> hyperplane_preimages(const RationalDisc& f) {
    return unit_disc_crossings(f.f0());
}

double j_from_crossings(const std::vector<HyperplaneCrossing>& crossings) {
    double j = 0.0;
    for (const HyperplaneCrossing& c : crossings) {
        const double a = std::abs(c.location);
        if (a <= kZeroFloor) return kInf;
        j -= c.multiplicity * std::log(a);
    }
    return j;
}

double j_functional(const RationalDisc& f) {
    return j_from_crossings(hyperplane_preimages(f));
}

double j_via_jensen(const RationalDisc& f, const QuadratureRule& rule) {
    const double center = std::abs(poly_eval(f.f0(), Complex(0.0, 0.0)));
    if (center <= kZeroFloor)
        throw CenterAtInfinity("f0(0) = 0: Jensen's formula does not apply");
    double sum = 0.0;
    for (const Complex& node : rule.nodes())
        sum += std::log(std::abs(poly_eval(f.f0(), node)));
    return sum * rule.weight() - std::log(center);
}

BlaschkeDecomposition blaschke_decompose(const Poly& f0) {
    Poly p = trimmed(f0);
    if (p.empty())
        throw ConstraintViolation("cannot decompose the zero polynomial");

    // Factor out an exact zero at the origin so the outer value stays finite;
    // |zeta|^m = 1 on the circle, so the Jensen identity is unaffected.
    int origin_multiplicity = 0;
    while (p.size() > 1 && std::abs(p.front()) <= kZeroFloor) {
        p.erase(p.begin());
        ++origin_multiplicity;
    }

    BlaschkeDecomposition out;
    if (origin_multiplicity > 0)
        out.crossings.push_back({Complex(0.0, 0.0), origin_multiplicity});
    auto rest = unit_disc_crossings(p);
    out.crossings.insert(out.crossings.end(), rest.begin(), rest.end());

    double log_sum = 0.0;
    for (const HyperplaneCrossing& c : rest)
        log_sum += c.multiplicity * std::log(std::abs(c.location));
    out.outer_value_at_zero = std::log(std::abs(p.front())) - log_sum;
    return out;
}

CircleMean circle_mean(const ScalarField& field, const RationalDisc& f,
                       const QuadratureRule& rule) {
    CircleMean out;
    double sum = 0.0;
    for (const Complex& node : rule.nodes()) {
        const auto point = evaluate_disc(f, node);
        if (!point)
            throw CircleCrossesInfinity("disc boundary meets the hyperplane at infinity");
        if (field.domain && !field.domain(*point))
            throw DomainViolation("circle image leaves the field domain");
        double v = field.value(*point);
        if (!(v >= kWeightFloor)) {  // also catches -inf and NaN
            v = kWeightFloor;
            out.clipped = true;
        }
        sum += v;
    }
    out.value = sum * rule.weight();
    return out;
}

WeightedDiscValue j_q(const RationalDisc& f, const Weight& q, const Domain& X,
                      const QuadratureRule& rule) {
    WeightedDiscValue out;
    const double j = j_functional(f);
    if (std::isinf(j)) {
        out.value = kInf;
        return out;
    }
    double sum = 0.0;
    for (const Complex& node : rule.nodes()) {
        const auto point = evaluate_disc(f, node);
        if (!point)
            throw CircleCrossesInfinity("disc boundary meets the hyperplane at infinity");
        if (!X.contains(*point)) continue;
        const Weight::Value v = q(*point);
        out.clipped = out.clipped || v.clipped;
        sum += v.value;
    }
    out.value = j + sum * rule.weight();
    return out;
}

}  // namespace extremal
