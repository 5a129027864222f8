#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace polypart {

/// One part type of the product  prod_{l >= 1} 1/(1 - q^{f(l)}).
/// Distinct indices with equal values are distinct part types.
struct Part {
  std::int64_t index;
  std::int64_t value;
};

/**
 * Integer-valued polynomial stored in the binomial basis
 *
 *     f(x) = sum_k c_k * C(x, k),   c_k integers, c_d != 0, d >= 1.
 *
 * Every integer-valued polynomial has integer binomial coefficients, so the
 * representation is exact and closed under evaluation at integers. The
 * monomial form is derived on demand.
 */
class IntegerValuedPoly {
 public:
  /// Trailing zero coefficients are dropped; throws ValidationError if the
  /// result has degree < 1.
  explicit IntegerValuedPoly(std::vector<mpz_class> binom_coeffs);

  const std::vector<mpz_class>& binom_coeffs() const { return binom_; }
  int degree() const { return static_cast<int>(binom_.size()) - 1; }

  /// Coefficient of x^r, i.e. c_r / r!.
  mpq_class leading_coeff() const;
  /// f(0) = c_0.
  const mpz_class& constant_term() const { return binom_.front(); }

  /// Coefficients of x^0..x^r.
  const std::vector<mpq_class>& monomial_coeffs() const { return monomial_; }

  mpz_class operator()(const mpz_class& x) const;
  mpz_class operator()(std::int64_t x) const { return (*this)(mpz_class(static_cast<long>(x))); }

  /// Real evaluation (Horner on the monomial form).
  double eval_real(double u) const;

  /// "binom:c0,c1,..."
  std::string binom_text() const;
  /// "rat:a0,a1,..." with reduced fractions.
  std::string rational_text() const;
  /// Both forms, "binom:... | rat:...".
  std::string canonical_text() const;

  /// Smallest l0 >= 1 such that f(l+1) > f(l) for every integer l >= l0.
  std::int64_t increasing_from() const { return increasing_from_; }

  friend bool operator==(const IntegerValuedPoly& a, const IntegerValuedPoly& b) {
    return a.binom_ == b.binom_;
  }

 private:
  std::vector<mpz_class> binom_;
  std::vector<mpq_class> monomial_;
  std::vector<double> monomial_real_;
  std::int64_t increasing_from_ = 1;
};

/// Accepts `binom:c0,...,cd` or `rat:p0/q0,...,pd/qd` (low degree first).
IntegerValuedPoly parse_poly(std::string_view text);

/// Convenience overload: exact f(l).
inline mpz_class eval(const IntegerValuedPoly& f, std::int64_t l) { return f(l); }

/// gcd of f over the integers (= gcd of the binomial coefficients).
mpz_class fixed_divisor(const IntegerValuedPoly& f);

/// gcd over l of f(l) - f(0) (= gcd of c_1..c_d).
mpz_class pi_f(const IntegerValuedPoly& f);

struct Admissibility {
  mpz_class fixed_divisor;
  bool leading_positive = false;
  /// First l >= 1 with f(l) <= 0, or 0 if f is positive on l >= 1.
  std::int64_t first_nonpositive = 0;

  bool ok() const { return fixed_divisor == 1 && leading_positive && first_nonpositive == 0; }
  /// Human-readable reason for the first failed hypothesis; empty if ok().
  std::string reason() const;
};

Admissibility check_admissible(const IntegerValuedPoly& f);

/// Throws ValidationError naming the failed hypothesis.
void require_admissible(const IntegerValuedPoly& f);

/// Inverse of f(0) modulo delta, in [1, delta]. Requires delta | pi_f(f).
std::int64_t f_hat_inverse(const IntegerValuedPoly& f, std::int64_t delta);

/// All (l, f(l)) with l >= 1 and f(l) <= N, ordered by l.
std::vector<Part> parts_up_to(const IntegerValuedPoly& f, std::int64_t N);

struct ValueCount {
  std::int64_t count;
  /// Main term (t / a_r)^{1/r}.
  double estimate;
};

/// #{l >= 1 : f(l) <= t}, with the leading-order estimate.
ValueCount count_values_upto(const IntegerValuedPoly& f, double t);

/// Trial-division factorization of a positive integer.
std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n);

/// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace polypart
