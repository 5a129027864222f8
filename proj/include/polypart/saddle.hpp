#pragma once

#include <gmpxx.h>

#include "polypart/ivpoly.hpp"

namespace polypart {

/// Default truncation: terms with f(l) x above this are dropped and bounded.
inline constexpr double kSaddleCutoff = 40.0;

struct SaddleSum {
  double value;
  /// Geometric bound on the dropped tail.
  double tail_bound;
};

/**
 * Derivatives of log G_f(x) = -sum_l log(1 - e^{-f(l) x}):
 *
 *   order 0:  log G_f(x)
 *   order 1:  sum_l f(l) / (e^{f(l) x} - 1)                 (= -d/dx log G_f)
 *   order 2:  sum_l f(l)^2 e^{f(l) x} / (e^{f(l) x} - 1)^2  (= d^2/dx^2 log G_f)
 *
 * Throws ValidationError for x <= 0 or order outside 0..2.
 */
SaddleSum saddle_sum(const IntegerValuedPoly& f, double x, int order, double cutoff = kSaddleCutoff);

/// zeta(s) for real s > 1 by Euler-Maclaurin summation.
double riemann_zeta(double s);

/// c_1(f) = zeta(1 + 1/r) Gamma(1 + 1/r) / (r a_r^{1/r}), so that n(x) ~ c_1 x^{-1-1/r}.
double leading_constant(const IntegerValuedPoly& f);

/// (c_1(f) / n)^{r/(r+1)}.
double leading_order_x(const IntegerValuedPoly& f, double n);

struct SaddlePoint {
  double n;
  double x;
  double residual;  // |sum_l f(l)/(e^{f(l)x} - 1) - n|
  double a2;
  double log_gf;
  /// log_gf + n x - log(2 pi a2) / 2
  double log_asym;
};

/// Bisection on the decreasing map x -> saddle_sum(f, x, 1), secant polish.
/// Throws NumericalError if no bracket is found after five widenings.
SaddlePoint solve_saddle(const IntegerValuedPoly& f, double n, double tol = 1e-11);

/// log of G_f(x) e^{n x} / sqrt(2 pi A_2(n)) at the solved saddle point.
double asymptotic_log_pf(const IntegerValuedPoly& f, double n);

/// Natural log of a positive big integer without overflow.
double log_mpz(const mpz_class& v);

}  // namespace polypart
