#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "polypart/counting.hpp"
#include "polypart/ivpoly.hpp"

namespace polypart {

/// Fractional part of F * y in [0, 1), exact up to the final rounding: y is
/// split into an integer mantissa times a power of two and the product is
/// reduced in integer arithmetic.
double frac_of_product(const mpz_class& F, double y);

/// sum_{1 <= n <= L} e(f(n) y).
std::complex<double> weyl_sum(const IntegerValuedPoly& f, double y, std::int64_t L);

/// Same sum at the rational phase y = d/h, with exact reduction of f(n) d mod h.
std::complex<double> weyl_sum_rational(const IntegerValuedPoly& f, std::int64_t d, std::int64_t h, std::int64_t L);

struct WeylReport {
  double y;
  std::int64_t L;
  std::complex<double> sum;
  double normalized_modulus;  // |sum| / L
};

WeylReport weyl_report(const IntegerValuedPoly& f, double y, std::int64_t L);

/// (1/h) sum_{1 <= j <= h} e(f(j) d / h). Requires h >= 1 and gcd(d, h) = 1.
std::complex<double> complete_sum(const IntegerValuedPoly& f, std::int64_t d, std::int64_t h);

/// 1 - (4/h^2) sin^2(pi/h)
double complete_sum_bound(std::int64_t h);

struct CompleteSumRow {
  std::int64_t h;
  std::int64_t d;
  double modulus2;
  double bound;
  bool pass;
};

struct CompleteSumScan {
  std::vector<CompleteSumRow> rows;
  std::int64_t violations = 0;
  std::int64_t skipped_h = 0;  // h dividing Pi_f
};

/// Every 2 <= h <= h_max with h not dividing Pi_f, every d coprime to h in [1, h).
CompleteSumScan check_complete_sum_bound(const IntegerValuedPoly& f, std::int64_t h_max);

struct Sin2Integral {
  double value;
  double ratio;  // value a^2 / L
  std::int64_t panels;
};

/// int_0^L sin^2(pi (b/a - f(u) y)) du by composite midpoint rule, panels
/// doubled until the relative change is below 1e-6.
Sin2Integral sin2_integral(const IntegerValuedPoly& f, std::int64_t a, std::int64_t b, double y, double L);

/// Parameters of F_{f,k,delta,j,ell}: twist (j + k ell) / (delta k).
struct FTwist {
  std::int64_t k;
  std::int64_t delta;
  std::int64_t j;
  std::int64_t ell;
};

/// Double series 2 sum_{n,c >= 1} (e^{-f(n) c x}/c) Re[1 - e(c((j + k ell)/(delta k) - f(n) y))],
/// truncated at f(n) c x > cutoff.
double F_value(const IntegerValuedPoly& f, const FTwist& t, double x, double y, double cutoff = 40.0);

/// -log |G_f(zeta_{delta k}^j, zeta_delta^ell e^{-x - 2 pi i y}) / G_f(x)|^2 from the product,
/// one stable log term per part.
double F_value_product(const IntegerValuedPoly& f, const FTwist& t, double x, double y, double cutoff = 40.0);

struct FSample {
  double y;
  std::int64_t j;
  std::int64_t ell;
  double F;
};

/// Product-form F on the uniform grid y = -1/2 + i/grid_size, all 1 <= j < k, 0 <= ell < delta.
std::vector<FSample> f_scan_samples(const IntegerValuedPoly& f, std::int64_t k, std::int64_t delta, double x,
                                    std::int64_t grid_size);

struct FScanResult {
  double min_F;
  double y;
  std::int64_t j;
  std::int64_t ell;
  double scale;  // k^{-2} x^{-1/r}
  double ratio;  // min_F / scale
};

/// Minimum of F over y in [-1/2, 1/2] (uniform grid plus Farey points d/h,
/// h <= 20, then a local golden-section polish) and all admissible (j, ell).
FScanResult min_F_scan(const IntegerValuedPoly& f, std::int64_t k, std::int64_t delta, double x,
                       std::int64_t grid_size);

struct MeanSquare {
  double E;
  double log_gf;      // log G_f(x)
  double comparison;  // G_f(x)^2 exp(-2 k^{-2} x^{-1/r})
  double ratio_to_gf2;
  std::int64_t terms;
};

/// sum_{n <= N, n = a f(0) mod delta} |p_f(a, delta k; n) - p_f(n)/k|^2 e^{-2 n x}.
/// Throws ValidationError when N is too small for x (tail not negligible).
MeanSquare mean_square_E(const IntegerValuedPoly& f, std::int64_t k, std::int64_t delta, std::int64_t a, double x,
                         std::int64_t N);

/// Same, reusing tables built to the same N (residues must have K = delta k).
MeanSquare mean_square_E(const PartitionTable& table, const ResidueTable& residues, std::int64_t k,
                         std::int64_t delta, std::int64_t a, double x);

}  // namespace polypart
