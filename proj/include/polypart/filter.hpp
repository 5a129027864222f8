#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "polypart/ivpoly.hpp"

namespace polypart {

/// Truncated q-series of G_f(zeta_{delta k}^j, zeta_delta^ell q), i.e.
/// prod_l 1/(1 - e(j/(delta k)) e(ell f(l)/delta) q^{f(l)}).
struct TwistedSeries {
  IntegerValuedPoly poly;
  std::int64_t j;
  std::int64_t k;
  std::int64_t ell;
  std::int64_t delta;
  std::int64_t N;
  std::vector<std::complex<double>> coeffs;
};

/// Requires delta | Pi_f, 0 <= j < delta k, 0 <= ell < delta.
TwistedSeries twisted_series(const IntegerValuedPoly& f, std::int64_t j, std::int64_t k, std::int64_t ell,
                             std::int64_t delta, std::int64_t N);

/// How the ell-sum of the right-hand side is written.
enum class EllSumForm {
  /// zeta_{delta k}^{-ja - k ell a f(0)} G_f(zeta_{delta k}^j, zeta_delta^ell q)
  kReduced,
  /// zeta_{delta k}^{-ja} zeta_delta^{-ell a} G_f(zeta_{delta k}^j, zeta_delta^{h ell} q),
  /// h = inverse of f(0) mod delta; a relabelling of kReduced.
  kPermuted,
};

/// Coefficients [q^n], n <= N, of
///   (1/(k delta)) sum_{1 <= j < k, 0 <= ell < delta} (root) G_f(zeta_{delta k}^j, zeta_delta^ell q).
/// Summation order is fixed (j outer, ell inner).
std::vector<std::complex<double>> filter_rhs(const IntegerValuedPoly& f, std::int64_t a, std::int64_t k,
                                             std::int64_t delta, std::int64_t N,
                                             EllSumForm form = EllSumForm::kReduced);

struct FilterRow {
  std::int64_t n;
  mpq_class lhs;  // p_f(a, delta k; n) - p_f(n)/k, exact
  mpz_class p;    // p_f(n)
  std::complex<double> rhs;
  double abs_error;
  double rel_error;  // abs_error / (p_f(n) + 1)
};

struct FilterReport {
  std::vector<FilterRow> rows;  // only n = a f(0) (mod delta)
  double max_rel_discrepancy = 0.0;
  /// max |Im rhs| / (p_f(n) + 1)
  double max_rel_imag = 0.0;
};

/// Compares the exact left-hand side from the counting tables against the
/// assembled twisted-series right-hand side for every admissible n <= N.
FilterReport verify_filter_identity(const IntegerValuedPoly& f, std::int64_t a, std::int64_t k, std::int64_t delta,
                                    std::int64_t N);

/// Throws ValidationError unless delta >= 1 divides Pi_f.
void require_delta_divides_pi(const IntegerValuedPoly& f, std::int64_t delta);

}  // namespace polypart
