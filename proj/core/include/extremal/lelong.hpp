#pragma once

#include <cstdint>
#include <vector>

#include "extremal/disc.hpp"
#include "extremal/types.hpp"

namespace extremal {

/// Sparse multivariate polynomial on C^n.
struct MultiPoly {
    struct Term {
        std::vector<int> exponents;  // one entry per variable
        Complex coeff;
    };

    int vars = 1;
    std::vector<Term> terms;

    static MultiPoly constant(int vars, Complex c);
    static MultiPoly coordinate(int vars, int index);  // z_{index+1}
    /// sum coeffs[j] * z_{j+1}
    static MultiPoly linear_form(const std::vector<Complex>& coeffs);
    static MultiPoly product(const MultiPoly& a, const MultiPoly& b);

    int total_degree() const;
    Complex eval(const AffinePoint& z) const;
    /// Degree-d homogenization z0^d * P(z1/z0, ...) evaluated at a point of
    /// C^{n+1} (zt[0] = z0). Requires d >= total_degree().
    Complex eval_homogeneous(const std::vector<Complex>& zt, int d) const;
    double coeff_l1() const;
};

/// A Lelong-class candidate u(z) = (1/d) log|P(z)| + c for a polynomial P of
/// total degree <= d, or the constant u = c when d = 0. Such functions are
/// plurisubharmonic with u(z) <= log+ ||z|| + growth_constant().
struct LelongCandidate {
    int degree = 0;  // d
    MultiPoly poly;  // unused when degree == 0
    double offset = 0.0;

    /// May return -inf at zeros of P.
    double operator()(const AffinePoint& z) const;

    double growth_constant() const;
};

/// Residual of the fundamental inequality:
///   J(f) + mean of u(f) over the circle - u(f(0)).
/// Nonnegative (up to quadrature error) for every Lelong-class u and every
/// disc whose boundary stays in C^n. Circle values of u are clipped at
/// kWeightFloor. Throws CenterAtInfinity when f(0) is at infinity.
double fundamental_inequality_check(const LelongCandidate& u, const RationalDisc& f,
                                    const QuadratureRule& rule);

/// Checks that the homogenized extension
///   v(z~) = (1/d) log|P^h(z~)| + c   (v = c + log|z0| when d = 0)
/// is log-homogeneous and satisfies the circle sub-mean-value inequality
/// along random complex affine lines in C^{n+1} \ {0}. Returns the largest
/// violation found over `trials` lines (expected <= 1e-6).
double homogenization_check(const LelongCandidate& u, int trials, std::uint64_t seed);

}  // namespace extremal
