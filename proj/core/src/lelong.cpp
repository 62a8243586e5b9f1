#include "extremal/lelong.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "extremal/errors.hpp"
#include "extremal/weight.hpp"

namespace extremal {

MultiPoly MultiPoly::constant(int vars, Complex c) {
    return {vars, {Term{std::vector<int>(vars, 0), c}}};
}

MultiPoly MultiPoly::coordinate(int vars, int index) {
    std::vector<int> e(vars, 0);
    e[index] = 1;
    return {vars, {Term{std::move(e), Complex(1.0, 0.0)}}};
}

MultiPoly MultiPoly::linear_form(const std::vector<Complex>& coeffs) {
    MultiPoly p;
    p.vars = static_cast<int>(coeffs.size());
    for (int j = 0; j < p.vars; ++j) {
        if (coeffs[j] == Complex(0.0, 0.0)) continue;
        std::vector<int> e(p.vars, 0);
        e[j] = 1;
        p.terms.push_back({std::move(e), coeffs[j]});
    }
    if (p.terms.empty()) p.terms.push_back({std::vector<int>(p.vars, 0), Complex(0.0, 0.0)});
    return p;
}

MultiPoly MultiPoly::product(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p;
    p.vars = a.vars;
    for (const Term& ta : a.terms) {
        for (const Term& tb : b.terms) {
            std::vector<int> e(p.vars);
            for (int j = 0; j < p.vars; ++j) e[j] = ta.exponents[j] + tb.exponents[j];
            // merge identical exponent rows
            bool merged = false;
            for (Term& t : p.terms) {
                if (t.exponents == e) {
                    t.coeff += ta.coeff * tb.coeff;
                    merged = true;
                    break;
                }
            }
            if (!merged) p.terms.push_back({std::move(e), ta.coeff * tb.coeff});
        }
    }
    return p;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const Term& t : terms) {
        int s = 0;
        for (int e : t.exponents) s += e;
        d = std::max(d, s);
    }
    return d;
}

Complex MultiPoly::eval(const AffinePoint& z) const {
    Complex acc(0.0, 0.0);
    for (const Term& t : terms) {
        Complex m = t.coeff;
        for (int j = 0; j < vars; ++j)
            for (int e = 0; e < t.exponents[j]; ++e) m *= z[j];
        acc += m;
    }
    return acc;
}

Complex MultiPoly::eval_homogeneous(const std::vector<Complex>& zt, int d) const {
    Complex acc(0.0, 0.0);
    for (const Term& t : terms) {
        Complex m = t.coeff;
        int total = 0;
        for (int j = 0; j < vars; ++j) {
            total += t.exponents[j];
            for (int e = 0; e < t.exponents[j]; ++e) m *= zt[j + 1];
        }
        for (int e = 0; e < d - total; ++e) m *= zt[0];
        acc += m;
    }
    return acc;
}

double MultiPoly::coeff_l1() const {
    double s = 0.0;
    for (const Term& t : terms) s += std::abs(t.coeff);
    return s;
}

double LelongCandidate::operator()(const AffinePoint& z) const {
    if (degree == 0) return offset;
    return std::log(std::abs(poly.eval(z))) / degree + offset;
}

double LelongCandidate::growth_constant() const {
    if (degree == 0) return offset;
    return offset + std::log(poly.coeff_l1()) / degree;
}

double fundamental_inequality_check(const LelongCandidate& u, const RationalDisc& f,
                                    const QuadratureRule& rule) {
    const auto center = evaluate_disc(f, Complex(0.0, 0.0));
    if (!center) throw CenterAtInfinity("disc centre lies on the hyperplane at infinity");

    const double j = j_functional(f);
    double sum = 0.0;
    for (const Complex& node : rule.nodes()) {
        const auto point = evaluate_disc(f, node);
        if (!point)
            throw CircleCrossesInfinity("disc boundary meets the hyperplane at infinity");
        sum += std::max(u(*point), kWeightFloor);
    }
    double center_value = u(*center);
    if (!(center_value >= kWeightFloor)) center_value = kWeightFloor;
    return j + sum * rule.weight() - center_value;
}

double homogenization_check(const LelongCandidate& u, int trials, std::uint64_t seed) {
    const int n = u.degree == 0 ? (u.poly.vars > 0 ? u.poly.vars : 1) : u.poly.vars;
    const int d = u.degree;
    std::mt19937_64 rng(mix_seed(seed, 0x404EULL));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    // homogenized extension, log-homogeneous of degree 1 by construction
    const auto v = [&](const std::vector<Complex>& zt) -> double {
        if (d == 0) return u.offset + std::log(std::abs(zt[0]));
        return std::log(std::abs(u.poly.eval_homogeneous(zt, d))) / d + u.offset;
    };

    const auto random_tilde_point = [&] {
        std::vector<Complex> p(n + 1);
        for (Complex& c : p) c = Complex(gauss(rng), gauss(rng));
        return p;
    };

    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto p = random_tilde_point();
        const auto dir = random_tilde_point();
        const double rho = 0.1 + 0.9 * unif(rng);

        // log-homogeneity: v(lambda p) = v(p) + log|lambda|
        const Complex lambda(gauss(rng), gauss(rng));
        if (std::abs(lambda) > 1e-6) {
            std::vector<Complex> scaled(p);
            for (Complex& c : scaled) c *= lambda;
            const double lhs = v(scaled);
            const double rhs = v(p) + std::log(std::abs(lambda));
            if (std::isfinite(lhs) && std::isfinite(rhs))
                worst = std::max(worst, std::abs(lhs - rhs));
        }

        // circle sub-mean-value along the affine line p + rho * e^{i theta} dir
        const double center = v(p);
        if (!std::isfinite(center)) continue;
        const auto mean = adaptive_circle_mean(
            [&](Complex zeta) {
                std::vector<Complex> q(p);
                for (int j = 0; j <= n; ++j) q[j] += rho * zeta * dir[j];
                return std::max(v(q), kWeightFloor);
            },
            64, 1e-10, 8192);
        worst = std::max(worst, center - mean.value);
    }
    return worst;
}

}  // namespace extremal
