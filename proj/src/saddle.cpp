#include "polypart/saddle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "polypart/errors.hpp"

namespace polypart {

SaddleSum saddle_sum(const IntegerValuedPoly& f, double x, int order, double cutoff) {
  if (!(x > 0.0)) throw ValidationError("saddle_sum requires x > 0");
  if (order < 0 || order > 2) throw ValidationError("saddle_sum order must be 0, 1 or 2");

  long double acc = 0.0L;
  double first_dropped = 0.0;
  for (std::int64_t l = 1;; ++l) {
    const double v = f.eval_real(static_cast<double>(l));
    if (v * x > cutoff) {
      if (l >= f.increasing_from()) {
        first_dropped = v;
        break;
      }
    }
    if (v <= 0.0) continue;
    const double e = std::exp(-v * x);
    const double one_minus = -std::expm1(-v * x);
    switch (order) {
      case 0:
        acc -= std::log1p(-e);
        break;
      case 1:
        acc += v * e / one_minus;
        break;
      default:
        acc += v * v * e / (one_minus * one_minus);
        break;
    }
  }

  // Dropped values are distinct integers >= first_dropped, so compare with
  // sum_{v >= V} v^order e^{-vx} / (1 - e^{-Vx})^{order or 1}.
  const double V = first_dropped;
  const double denom = -std::expm1(-V * x);
  const double head = std::pow(V, order) * std::exp(-V * x) / std::pow(denom, order == 0 ? 1 : order);
  const double ratio = std::pow(1.0 + 1.0 / V, order) * std::exp(-x);
  const double tail = ratio < 1.0 ? head / (1.0 - ratio) : std::numeric_limits<double>::infinity();
  return {static_cast<double>(acc), tail};
}

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw ValidationError("riemann_zeta requires s > 1");
  // B_2, B_4, ..., B_20
  static constexpr std::array<double, 10> bernoulli = {
      1.0 / 6,    -1.0 / 30,         1.0 / 42,       -1.0 / 30,     5.0 / 66,
      -691.0 / 2730, 7.0 / 6,        -3617.0 / 510,  43867.0 / 798, -174611.0 / 330};
  constexpr int terms = 10;
  const double N = terms;
  double sum = 0.0;
  for (int k = 1; k < terms; ++k) sum += std::pow(static_cast<double>(k), -s);
  sum += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);

  // rising = s (s+1) ... (s + 2j - 2), fact = (2j)!
  double rising = s;
  double fact = 2.0;
  double power = std::pow(N, -s - 1.0);
  for (int j = 1; j <= static_cast<int>(bernoulli.size()); ++j) {
    sum += bernoulli[j - 1] / fact * rising * power;
    rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    power /= N * N;
  }
  return sum;
}

double leading_constant(const IntegerValuedPoly& f) {
  const double r = f.degree();
  const double s = 1.0 + 1.0 / r;
  return riemann_zeta(s) * std::tgamma(s) / (r * std::pow(f.leading_coeff().get_d(), 1.0 / r));
}

double leading_order_x(const IntegerValuedPoly& f, double n) {
  if (!(n > 0.0)) throw ValidationError("leading_order_x requires n > 0");
  const double r = f.degree();
  return std::pow(leading_constant(f) / n, r / (r + 1.0));
}

SaddlePoint solve_saddle(const IntegerValuedPoly& f, double n, double tol) {
  if (!(n >= 1.0)) throw ValidationError("solve_saddle requires n >= 1");
  require_admissible(f);
  auto g = [&](double x) { return saddle_sum(f, x, 1).value - n; };

  const double x0 = leading_order_x(f, n);
  double lo = x0 / 10.0;
  double hi = x0 * 10.0;
  double g_lo = g(lo);
  double g_hi = g(hi);
  for (int widen = 0; widen < 5 && !(g_lo > 0.0 && g_hi < 0.0); ++widen) {
    if (!(g_lo > 0.0)) g_lo = g(lo /= 10.0);
    if (!(g_hi < 0.0)) g_hi = g(hi *= 10.0);
  }
  if (!(g_lo > 0.0 && g_hi < 0.0)) {
    throw NumericalError("saddle point bracket not found for n = " + std::to_string(n));
  }

  // Geometric bisection down to a narrow bracket.
  while (hi / lo - 1.0 > 1e-6) {
    const double mid = std::sqrt(lo * hi);
    const double g_mid = g(mid);
    if (g_mid > 0.0) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
    }
  }

  // Secant polish, kept inside the bracket.
  double x = lo;
  double gx = g_lo;
  if (std::abs(g_hi) < std::abs(g_lo)) {
    x = hi;
    gx = g_hi;
  }
  for (int iter = 0; iter < 100 && std::abs(gx) > tol * n; ++iter) {
    double cand = hi - g_hi * (hi - lo) / (g_hi - g_lo);
    if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
    const double g_cand = g(cand);
    if (g_cand > 0.0) {
      lo = cand;
      g_lo = g_cand;
    } else {
      hi = cand;
      g_hi = g_cand;
    }
    x = cand;
    gx = g_cand;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }

  SaddlePoint sp;
  sp.n = n;
  sp.x = x;
  sp.residual = std::abs(gx);
  sp.a2 = saddle_sum(f, x, 2).value;
  sp.log_gf = saddle_sum(f, x, 0).value;
  sp.log_asym = sp.log_gf + n * x - 0.5 * std::log(2.0 * std::numbers::pi * sp.a2);
  return sp;
}

double asymptotic_log_pf(const IntegerValuedPoly& f, double n) { return solve_saddle(f, n).log_asym; }

double log_mpz(const mpz_class& v) {
  if (sgn(v) <= 0) throw ValidationError("log_mpz requires a positive integer");
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp) * std::numbers::ln2;
}

}  // namespace polypart
