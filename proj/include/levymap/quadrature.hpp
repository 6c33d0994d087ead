#ifndef LEVYMAP_QUADRATURE_HPP
#define LEVYMAP_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

#include "levymap/common.hpp"

namespace levymap {

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

/// Adaptive Gauss-Kronrod 15(7) on a finite interval, absolute tolerance.
/// Throws QuadratureNonConvergence when refinement stalls above tol after
/// 60 bisection levels.
double integrate(const RealFn& f, double a, double b, double tol,
                 int max_levels = 60);

std::complex<double> integrate_complex(const ComplexFn& f, double a, double b,
                                       double tol, int max_levels = 60);

/// Integral over (a, b) with 0 < a < b <= +inf, evaluated in log coordinates
/// with the interval split at r = 1 when it straddles it.  The integrand must
/// be absolutely integrable; for b = +inf the upper limit is extended in
/// doubling log steps until two consecutive extensions each contribute less
/// than tol/8.
double integrate_log(const RealFn& f, double a, double b, double tol);

/// Integral of f over (0, b) where |f(r)| is integrable near zero.  The lower
/// limit is pushed down in doubling log steps until two consecutive
/// extensions fall below tol/8.
double integrate_log_to_zero(const RealFn& f, double b, double tol);

} // namespace levymap

#endif
