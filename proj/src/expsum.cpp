#include "polypart/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "polypart/errors.hpp"
#include "polypart/filter.hpp"
#include "polypart/phase.hpp"
#include "polypart/saddle.hpp"

namespace polypart {

double frac_of_product(const mpz_class& F, double y) {
  if (y == 0.0 || sgn(F) == 0) return 0.0;
  int ex = 0;
  const double fr = std::frexp(y, &ex);
  // y = m * 2^e with m a 53-bit integer
  const auto m = static_cast<long>(std::ldexp(fr, 53));
  const long e = static_cast<long>(ex) - 53;
  if (e >= 0) return 0.0;
  mpz_class prod = F * m;
  mpz_class rem;
  mpz_fdiv_r_2exp(rem.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  const double t = std::ldexp(rem.get_d(), static_cast<int>(e));
  return t >= 1.0 ? 0.0 : t;
}

std::complex<double> weyl_sum(const IntegerValuedPoly& f, double y, std::int64_t L) {
  if (L < 1) throw ValidationError("weyl_sum requires L >= 1");
  std::complex<long double> acc = 0.0L;
  for (std::int64_t n = 1; n <= L; ++n) {
    const auto z = unit_phase(frac_of_product(f(n), y));
    acc += std::complex<long double>(z.real(), z.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::complex<double> weyl_sum_rational(const IntegerValuedPoly& f, std::int64_t d, std::int64_t h, std::int64_t L) {
  if (L < 1) throw ValidationError("weyl_sum requires L >= 1");
  if (h < 1) throw ValidationError("denominator h must be positive");
  std::complex<long double> acc = 0.0L;
  for (std::int64_t n = 1; n <= L; ++n) {
    const auto z = root_of_unity(mod_floor(f(n) * d, h), h);
    acc += std::complex<long double>(z.real(), z.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

WeylReport weyl_report(const IntegerValuedPoly& f, double y, std::int64_t L) {
  const auto s = weyl_sum(f, y, L);
  return {y, L, s, std::abs(s) / static_cast<double>(L)};
}

std::complex<double> complete_sum(const IntegerValuedPoly& f, std::int64_t d, std::int64_t h) {
  if (h < 1) throw ValidationError("complete_sum requires h >= 1");
  if (std::gcd(d, h) != 1) throw ValidationError("complete_sum requires gcd(d, h) = 1");
  return weyl_sum_rational(f, d, h, h) / static_cast<double>(h);
}

double complete_sum_bound(std::int64_t h) {
  const double hh = static_cast<double>(h);
  const double s = std::sin(std::numbers::pi / hh);
  return 1.0 - 4.0 / (hh * hh) * s * s;
}

CompleteSumScan check_complete_sum_bound(const IntegerValuedPoly& f, std::int64_t h_max) {
  require_admissible(f);
  const mpz_class pi = pi_f(f);
  CompleteSumScan scan;
  for (std::int64_t h = 2; h <= h_max; ++h) {
    if (pi % h == 0) {
      ++scan.skipped_h;
      continue;
    }
    const double bound = complete_sum_bound(h);
    for (std::int64_t d = 1; d < h; ++d) {
      if (std::gcd(d, h) != 1) continue;
      const double m2 = std::norm(complete_sum(f, d, h));
      const bool pass = m2 <= bound + 1e-12;
      if (!pass) ++scan.violations;
      scan.rows.push_back({h, d, m2, bound, pass});
    }
  }
  return scan;
}

Sin2Integral sin2_integral(const IntegerValuedPoly& f, std::int64_t a, std::int64_t b, double y, double L) {
  if (!(1 <= b && b < a)) throw ValidationError("sin2_integral requires 1 <= b < a");
  if (!(L >= 1.0)) throw ValidationError("sin2_integral requires L >= 1");
  const double shift = static_cast<double>(b) / static_cast<double>(a);
  auto midpoint = [&](std::int64_t panels) {
    const double h = L / static_cast<double>(panels);
    long double acc = 0.0L;
    for (std::int64_t i = 0; i < panels; ++i) {
      const double u = (static_cast<double>(i) + 0.5) * h;
      const double s = std::sin(std::numbers::pi * (shift - f.eval_real(u) * y));
      acc += s * s;
    }
    return static_cast<double>(acc) * h;
  };

  // Start with a few panels per oscillation of the integrand.
  const double oscillations = std::abs((f.eval_real(L) - f.eval_real(0.0)) * y);
  auto panels = static_cast<std::int64_t>(64 + 16 * std::ceil(oscillations));
  double prev = midpoint(panels);
  constexpr std::int64_t kMaxPanels = std::int64_t{1} << 26;
  while (panels < kMaxPanels) {
    panels *= 2;
    const double cur = midpoint(panels);
    const bool converged = std::abs(cur - prev) <= 1e-6 * std::abs(cur) || std::abs(cur - prev) <= 1e-14 * L;
    prev = cur;
    if (converged) break;
  }
  return {prev, prev * static_cast<double>(a * a) / L, panels};
}

namespace {

struct PartPhase {
  double decay;  // e^{-f(n) x}
  double fx;     // f(n) x
  double phase;  // frac(theta - f(n) y)
};

void require_twist(const IntegerValuedPoly& f, const FTwist& t) {
  require_delta_divides_pi(f, t.delta);
  if (!(1 <= t.j && t.j < t.k)) throw ValidationError("F requires 1 <= j < k");
  if (!(0 <= t.ell && t.ell < t.delta)) throw ValidationError("F requires 0 <= ell < delta");
}

std::vector<PartPhase> part_phases(const IntegerValuedPoly& f, const FTwist& t, double x, double y, double cutoff) {
  if (!(x > 0.0)) throw ValidationError("F requires x > 0");
  const std::int64_t modulus = t.delta * t.k;
  const double theta =
      static_cast<double>(mod_floor(t.j + t.k * t.ell, modulus)) / static_cast<double>(modulus);
  std::vector<PartPhase> out;
  for (std::int64_t n = 1;; ++n) {
    const mpz_class v = f(n);
    const double fx = v.get_d() * x;
    if (fx > cutoff) {
      if (n >= f.increasing_from()) break;
      continue;
    }
    double phase = theta - frac_of_product(v, y);
    if (phase < 0.0) phase += 1.0;
    out.push_back({std::exp(-fx), fx, phase});
  }
  return out;
}

}  // namespace

double F_value(const IntegerValuedPoly& f, const FTwist& t, double x, double y, double cutoff) {
  require_twist(f, t);
  long double acc = 0.0L;
  for (const auto& p : part_phases(f, t, x, y, cutoff)) {
    double power = p.decay;
    for (std::int64_t c = 1; static_cast<double>(c) * p.fx <= cutoff; ++c) {
      double cphase = static_cast<double>(c) * p.phase;
      cphase -= std::floor(cphase);
      acc += power / static_cast<double>(c) * (1.0 - std::cos(2.0 * std::numbers::pi * cphase));
      power *= p.decay;
    }
  }
  return 2.0 * static_cast<double>(acc);
}

double F_value_product(const IntegerValuedPoly& f, const FTwist& t, double x, double y, double cutoff) {
  require_twist(f, t);
  long double acc = 0.0L;
  for (const auto& p : part_phases(f, t, x, y, cutoff)) {
    // |1 - w|^2 = (1 - e)^2 + 4 e sin^2(pi phase), w = e * e(phase)
    const double one_minus = -std::expm1(-p.fx);
    const double s = std::sin(std::numbers::pi * p.phase);
    acc += std::log1p(4.0 * p.decay * s * s / (one_minus * one_minus));
  }
  return static_cast<double>(acc);
}

namespace {

void require_scan_args(const IntegerValuedPoly& f, std::int64_t k, std::int64_t delta, double x,
                       std::int64_t grid_size) {
  require_delta_divides_pi(f, delta);
  if (k < 2) throw ValidationError("F scan requires k >= 2 (the j-range 1 <= j < k is empty otherwise)");
  if (!(x > 0.0 && x <= 0.5)) throw ValidationError("F scan requires 0 < x <= 0.5");
  if (grid_size < 1000) throw ValidationError("F scan requires grid_size >= 1000");
}

}  // namespace

std::vector<FSample> f_scan_samples(const IntegerValuedPoly& f, std::int64_t k, std::int64_t delta, double x,
                                    std::int64_t grid_size) {
  require_scan_args(f, k, delta, x, grid_size);
  std::vector<FSample> out;
  for (std::int64_t i = 0; i <= grid_size; ++i) {
    const double y = -0.5 + static_cast<double>(i) / static_cast<double>(grid_size);
    for (std::int64_t j = 1; j < k; ++j) {
      for (std::int64_t ell = 0; ell < delta; ++ell) {
        out.push_back({y, j, ell, F_value_product(f, {k, delta, j, ell}, x, y)});
      }
    }
  }
  return out;
}

FScanResult min_F_scan(const IntegerValuedPoly& f, std::int64_t k, std::int64_t delta, double x,
                       std::int64_t grid_size) {
  require_scan_args(f, k, delta, x, grid_size);
  std::vector<double> ys;
  for (std::int64_t i = 0; i <= grid_size; ++i) ys.push_back(-0.5 + static_cast<double>(i) / grid_size);
  for (std::int64_t h = 1; h <= 20; ++h) {
    for (std::int64_t d = -h / 2; d <= h / 2; ++d) {
      if (std::gcd(d, h) == 1) ys.push_back(static_cast<double>(d) / static_cast<double>(h));
    }
  }

  FScanResult best{std::numeric_limits<double>::infinity(), 0.0, 1, 0, 0.0, 0.0};
  for (std::int64_t j = 1; j < k; ++j) {
    for (std::int64_t ell = 0; ell < delta; ++ell) {
      for (double y : ys) {
        const double F = F_value_product(f, {k, delta, j, ell}, x, y);
        if (F < best.min_F) best = {F, y, j, ell, 0.0, 0.0};
      }
    }
  }

  // Golden-section polish around the best grid point.
  const FTwist twist{k, delta, best.j, best.ell};
  const double step = 1.0 / static_cast<double>(grid_size);
  double lo = best.y - step;
  double hi = best.y + step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - g * (hi - lo);
  double d = lo + g * (hi - lo);
  double fc = F_value_product(f, twist, x, c);
  double fd = F_value_product(f, twist, x, d);
  for (int iter = 0; iter < 60; ++iter) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = F_value_product(f, twist, x, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = F_value_product(f, twist, x, d);
    }
  }
  const double y_polished = 0.5 * (lo + hi);
  const double F_polished = F_value_product(f, twist, x, y_polished);
  if (F_polished < best.min_F) {
    best.min_F = F_polished;
    best.y = y_polished;
  }

  const double r = f.degree();
  best.scale = std::pow(x, -1.0 / r) / static_cast<double>(k * k);
  best.ratio = best.min_F / best.scale;
  return best;
}

MeanSquare mean_square_E(const PartitionTable& table, const ResidueTable& residues, std::int64_t k,
                         std::int64_t delta, std::int64_t a, double x) {
  const auto& f = table.poly;
  require_delta_divides_pi(f, delta);
  if (k < 1) throw ValidationError("k must be positive");
  if (!(x > 0.0)) throw ValidationError("mean_square_E requires x > 0");
  if (residues.K != delta * k || residues.N != table.N) {
    throw ValidationError("residue table must have K = delta k and the same N");
  }
  const std::int64_t N = table.N;
  const double log_gf = saddle_sum(f, x, 0).value;

  // The terms p_f(n)^2 e^{-2nx} peak near n(x) and decay after it; require N
  // well past the peak and the last term negligible against G_f(x)^2.
  const double peak = saddle_sum(f, x, 1).value;
  const double last = 2.0 * (log_mpz(table[N]) - static_cast<double>(N) * x);
  if (static_cast<double>(N) < 2.0 * peak || last > std::log(1e-30) + 2.0 * log_gf) {
    throw ValidationError("N = " + std::to_string(N) + " too small for x = " + std::to_string(x) +
                          " (truncated tail not negligible)");
  }

  MeanSquare out{};
  out.log_gf = log_gf;
  const mpz_class shift = a * f.constant_term();
  long double acc = 0.0L;
  for (std::int64_t n = 0; n <= N; ++n) {
    if (mod_floor(mpz_class(static_cast<long>(n)) - shift, delta) != 0) continue;
    ++out.terms;
    // |p_f(a, delta k; n) - p_f(n)/k| = |k p_f(a, delta k; n) - p_f(n)| / k
    const mpz_class scaled = abs(residues.at(a, n) * k - table[n]);
    if (sgn(scaled) == 0) continue;
    const double log_diff = log_mpz(scaled) - std::log(static_cast<double>(k));
    acc += std::exp(2.0 * (log_diff - static_cast<double>(n) * x));
  }
  out.E = static_cast<double>(acc);
  const double r = f.degree();
  out.ratio_to_gf2 = out.E / std::exp(2.0 * log_gf);
  out.comparison =
      std::exp(2.0 * log_gf - 2.0 * std::pow(x, -1.0 / r) / static_cast<double>(k * k));
  return out;
}

MeanSquare mean_square_E(const IntegerValuedPoly& f, std::int64_t k, std::int64_t delta, std::int64_t a, double x,
                         std::int64_t N) {
  require_delta_divides_pi(f, delta);
  if (k < 1) throw ValidationError("k must be positive");
  return mean_square_E(build_table(f, N), build_residue_table(f, delta * k, N), k, delta, a, x);
}

}  // namespace polypart
