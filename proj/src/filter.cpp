#include "polypart/filter.hpp"

#include <cmath>
#include <string>

#include "polypart/counting.hpp"
#include "polypart/errors.hpp"
#include "polypart/phase.hpp"

namespace polypart {

void require_delta_divides_pi(const IntegerValuedPoly& f, std::int64_t delta) {
  if (delta < 1) throw ValidationError("delta must be positive");
  if (pi_f(f) % delta != 0) {
    throw ValidationError("delta " + std::to_string(delta) + " does not divide Pi_f = " + pi_f(f).get_str());
  }
}

TwistedSeries twisted_series(const IntegerValuedPoly& f, std::int64_t j, std::int64_t k, std::int64_t ell,
                             std::int64_t delta, std::int64_t N) {
  require_delta_divides_pi(f, delta);
  if (k < 1) throw ValidationError("k must be positive");
  if (j < 0 || j >= delta * k) throw ValidationError("twist index j out of range [0, delta k)");
  if (ell < 0 || ell >= delta) throw ValidationError("q-twist ell out of range [0, delta)");
  if (N < 0) throw ValidationError("N must be non-negative");

  const std::int64_t modulus = delta * k;
  TwistedSeries s{f, j, k, ell, delta, N, std::vector<std::complex<double>>(static_cast<std::size_t>(N + 1))};
  s.coeffs[0] = 1.0;
  for (const Part& part : parts_up_to(f, N)) {
    // e(j/(delta k)) e(ell v/delta) = e((j + k ell v) / (delta k))
    const std::int64_t num = j + k * ell * mod_floor(part.value, delta);
    const std::complex<double> w = root_of_unity(num, modulus);
    const auto v = static_cast<std::size_t>(part.value);
    for (std::size_t n = v; n < s.coeffs.size(); ++n) s.coeffs[n] += w * s.coeffs[n - v];
  }
  return s;
}

std::vector<std::complex<double>> filter_rhs(const IntegerValuedPoly& f, std::int64_t a, std::int64_t k,
                                             std::int64_t delta, std::int64_t N, EllSumForm form) {
  require_delta_divides_pi(f, delta);
  if (k < 1) throw ValidationError("k must be positive");
  const std::int64_t modulus = delta * k;
  const std::int64_t a_mod = mod_floor(a, modulus);
  const std::int64_t f0 = mod_floor(f.constant_term(), modulus);
  const std::int64_t h = f_hat_inverse(f, delta);

  std::vector<std::complex<double>> rhs(static_cast<std::size_t>(N + 1));
  const double scale = 1.0 / static_cast<double>(modulus);
  for (std::int64_t j = 1; j < k; ++j) {
    for (std::int64_t ell = 0; ell < delta; ++ell) {
      std::complex<double> root;
      std::int64_t series_ell = ell;
      if (form == EllSumForm::kReduced) {
        root = root_of_unity(-(j * a_mod) - mod_floor(k * ell % modulus * a_mod % modulus * f0, modulus), modulus);
      } else {
        root = root_of_unity(-(j * a_mod) - k * ell % modulus * a_mod % modulus, modulus);
        series_ell = (h * ell) % delta;
      }
      const auto series = twisted_series(f, j, k, series_ell, delta, N);
      for (std::size_t n = 0; n < rhs.size(); ++n) rhs[n] += scale * root * series.coeffs[n];
    }
  }
  return rhs;
}

FilterReport verify_filter_identity(const IntegerValuedPoly& f, std::int64_t a, std::int64_t k, std::int64_t delta,
                                    std::int64_t N) {
  require_delta_divides_pi(f, delta);
  if (k < 1) throw ValidationError("k must be positive");
  const auto table = build_table(f, N);
  const auto residues = build_residue_table(f, delta * k, N);
  const auto rhs = filter_rhs(f, a, k, delta, N);

  FilterReport report;
  const mpz_class shift = a * f.constant_term();
  for (std::int64_t n = 0; n <= N; ++n) {
    if (mod_floor(mpz_class(static_cast<long>(n)) - shift, delta) != 0) continue;
    FilterRow row;
    row.n = n;
    row.p = table[n];
    row.lhs = mpq_class(residues.at(a, n)) - mpq_class(table[n], k);
    row.lhs.canonicalize();
    row.rhs = rhs[static_cast<std::size_t>(n)];
    row.abs_error = std::abs(std::complex<double>(row.lhs.get_d(), 0.0) - row.rhs);
    const double norm = mpz_class(table[n] + 1).get_d();
    row.rel_error = row.abs_error / norm;
    report.max_rel_discrepancy = std::max(report.max_rel_discrepancy, row.rel_error);
    report.max_rel_imag = std::max(report.max_rel_imag, std::abs(row.rhs.imag()) / norm);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace polypart
