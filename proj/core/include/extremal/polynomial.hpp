#pragma once

#include <vector>

#include "extremal/types.hpp"

namespace extremal {

/// Univariate polynomial in zeta, coefficients constant-term first.
using Poly = std::vector<Complex>;

Complex poly_eval(const Poly& p, Complex zeta);

Poly poly_derivative(const Poly& p);

/// Index of the highest coefficient with |c| > tol, or -1 for the zero
/// polynomial.
int poly_degree(const Poly& p, double tol = 0.0);

/// Expands prod (zeta - r_i) times `leading`.
Poly poly_from_roots(const std::vector<Complex>& roots, Complex leading = Complex(1.0, 0.0));

Poly poly_multiply(const Poly& a, const Poly& b);

/// All roots of p, via companion-matrix eigenvalues with Newton polish.
/// Deterministic. Throws RootFindingFailure if a polished root has a
/// relative residual above 1e-10.
std::vector<Complex> poly_roots(const Poly& p);

}  // namespace extremal
