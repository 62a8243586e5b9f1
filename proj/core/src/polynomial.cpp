#include "extremal/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "extremal/errors.hpp"

namespace extremal {

Complex poly_eval(const Poly& p, Complex zeta) {
    Complex acc(0.0, 0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * zeta + *it;
    return acc;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {Complex(0.0, 0.0)};
    Poly d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k)
        d[k - 1] = p[k] * static_cast<double>(k);
    return d;
}

int poly_degree(const Poly& p, double tol) {
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
        if (std::abs(p[k]) > tol) return k;
    return -1;
}

Poly poly_from_roots(const std::vector<Complex>& roots, Complex leading) {
    Poly p{leading};
    for (const Complex& r : roots) {
        Poly next(p.size() + 1, Complex(0.0, 0.0));
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k + 1] += p[k];
            next[k] -= p[k] * r;
        }
        p = std::move(next);
    }
    return p;
}

Poly poly_multiply(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

namespace {

// Relative residual |p(a)| / sum |c_k| |a|^k, the backward-error scale.
double relative_residual(const Poly& p, Complex a) {
    double scale = 0.0;
    double pw = 1.0;
    const double aa = std::abs(a);
    for (const Complex& c : p) {
        scale += std::abs(c) * pw;
        pw *= aa;
    }
    if (scale < 1e-300) scale = 1e-300;
    return std::abs(poly_eval(p, a)) / scale;
}

Complex newton_polish(const Poly& p, const Poly& dp, Complex a) {
    Complex best = a;
    double best_res = std::abs(poly_eval(p, a));
    Complex x = a;
    for (int it = 0; it < 16; ++it) {
        const Complex fx = poly_eval(p, x);
        const Complex dfx = poly_eval(dp, x);
        if (std::abs(dfx) < 1e-300) break;
        const Complex step = fx / dfx;
        x -= step;
        const double res = std::abs(poly_eval(p, x));
        if (res < best_res) {
            best_res = res;
            best = x;
        }
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    return best;
}

}  // namespace

std::vector<Complex> poly_roots(const Poly& p) {
    const int deg = poly_degree(p);
    if (deg < 0) throw RootFindingFailure("cannot find roots of the zero polynomial");
    if (deg == 0) return {};

    // Normalize to a monic polynomial of exact degree.
    Poly q(p.begin(), p.begin() + deg + 1);
    const Complex lead = q.back();
    for (Complex& c : q) c /= lead;

    std::vector<Complex> roots;
    roots.reserve(deg);
    if (deg == 1) {
        roots.push_back(-q[0]);
    } else {
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -q[i];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
        if (solver.info() != Eigen::Success)
            throw RootFindingFailure("companion-matrix eigenvalue solve failed");
        for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
    }

    const Poly dq = poly_derivative(q);
    for (Complex& r : roots) {
        r = newton_polish(q, dq, r);
        if (relative_residual(q, r) > 1e-10)
            throw RootFindingFailure("root residual above tolerance");
    }

    // Deterministic order regardless of the eigenvalue ordering.
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace extremal
