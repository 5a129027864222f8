#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include <gmpxx.h>

namespace polypart {

/// e(t) = exp(2 pi i t) for t already reduced to [0, 1).
inline std::complex<double> unit_phase(double t) {
  const double angle = 2.0 * std::numbers::pi * t;
  return {std::cos(angle), std::sin(angle)};
}

/// Non-negative residue of num mod den.
inline std::int64_t mod_floor(std::int64_t num, std::int64_t den) {
  std::int64_t r = num % den;
  return r < 0 ? r + den : r;
}

inline std::int64_t mod_floor(const mpz_class& num, std::int64_t den) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(den));
  return r.get_si();
}

/// e(num / den), computed from the reduced residue rather than by repeated multiplication.
inline std::complex<double> root_of_unity(std::int64_t num, std::int64_t den) {
  return unit_phase(static_cast<double>(mod_floor(num, den)) / static_cast<double>(den));
}

}  // namespace polypart
