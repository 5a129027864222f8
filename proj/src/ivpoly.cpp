#include "polypart/ivpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "polypart/errors.hpp"

namespace polypart {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(',', start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

mpz_class parse_integer(std::string_view tok) {
  std::string s(tok);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw ValidationError("not an integer: '" + std::string(tok) + "'");
  }
  return v;
}

mpq_class parse_rational(std::string_view tok) {
  auto slash = tok.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(tok));
  mpz_class num = parse_integer(trim(tok.substr(0, slash)));
  mpz_class den = parse_integer(trim(tok.substr(slash + 1)));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(tok) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Monomial coefficients of sum_k c_k C(x, k).
std::vector<mpq_class> binomial_to_monomial(const std::vector<mpz_class>& binom) {
  std::vector<mpq_class> out(binom.size(), mpq_class(0));
  // falling[i] = coefficient of x^i in x(x-1)...(x-k+1)
  std::vector<mpz_class> falling{1};
  mpz_class factorial = 1;
  for (std::size_t k = 0; k < binom.size(); ++k) {
    if (k > 0) {
      factorial *= static_cast<unsigned long>(k);
      std::vector<mpz_class> next(falling.size() + 1, mpz_class(0));
      const long shift = static_cast<long>(k) - 1;
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * shift;
      }
      falling = std::move(next);
    }
    for (std::size_t i = 0; i < falling.size(); ++i) {
      out[i] += mpq_class(binom[k] * falling[i], factorial);
    }
  }
  for (auto& q : out) q.canonicalize();
  return out;
}

// Ceil of 1 + max_{i<r} |a_i / a_r|: every real root has modulus below it.
mpz_class cauchy_bound(const std::vector<mpq_class>& mono) {
  const mpq_class& lead = mono.back();
  mpq_class best = 0;
  for (std::size_t i = 0; i + 1 < mono.size(); ++i) {
    mpq_class ratio = abs(mono[i] / lead);
    if (ratio > best) best = ratio;
  }
  best += 1;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
  return c;
}

std::int64_t to_int64(const mpz_class& v, const char* what) {
  if (!v.fits_slong_p()) throw ValidationError(std::string(what) + " does not fit in 64 bits");
  return v.get_si();
}

}  // namespace

IntegerValuedPoly::IntegerValuedPoly(std::vector<mpz_class> binom_coeffs) : binom_(std::move(binom_coeffs)) {
  while (!binom_.empty() && binom_.back() == 0) binom_.pop_back();
  if (binom_.size() < 2) throw ValidationError("polynomial must have degree >= 1");
  monomial_ = binomial_to_monomial(binom_);
  monomial_real_.reserve(monomial_.size());
  for (const auto& q : monomial_) monomial_real_.push_back(q.get_d());

  if (degree() >= 2 && sgn(binom_.back()) > 0) {
    // f(x+1) - f(x) = sum_{k>=1} c_k C(x, k-1); increasing beyond its root bound.
    std::vector<mpz_class> diff(binom_.begin() + 1, binom_.end());
    mpz_class bound = cauchy_bound(binomial_to_monomial(diff));
    increasing_from_ = std::max<std::int64_t>(1, to_int64(bound, "monotonicity bound"));
  }
}

mpq_class IntegerValuedPoly::leading_coeff() const {
  mpz_class factorial = 1;
  for (int k = 2; k <= degree(); ++k) factorial *= k;
  mpq_class q(binom_.back(), factorial);
  q.canonicalize();
  return q;
}

mpz_class IntegerValuedPoly::operator()(const mpz_class& x) const {
  mpz_class result = binom_[0];
  mpz_class term = 1;  // C(x, k)
  for (std::size_t k = 1; k < binom_.size(); ++k) {
    term *= x - static_cast<long>(k - 1);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(k));
    result += binom_[k] * term;
  }
  return result;
}

double IntegerValuedPoly::eval_real(double u) const {
  double acc = 0.0;
  for (auto it = monomial_real_.rbegin(); it != monomial_real_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

std::string IntegerValuedPoly::binom_text() const {
  std::ostringstream os;
  os << "binom:";
  for (std::size_t i = 0; i < binom_.size(); ++i) os << (i ? "," : "") << binom_[i].get_str();
  return os.str();
}

std::string IntegerValuedPoly::rational_text() const {
  std::ostringstream os;
  os << "rat:";
  for (std::size_t i = 0; i < monomial_.size(); ++i) os << (i ? "," : "") << monomial_[i].get_str();
  return os.str();
}

std::string IntegerValuedPoly::canonical_text() const { return binom_text() + " | " + rational_text(); }

IntegerValuedPoly parse_poly(std::string_view text) {
  text = trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("polynomial must start with 'binom:' or 'rat:'");
  }
  std::string_view kind = trim(text.substr(0, colon));
  auto tokens = split_commas(text.substr(colon + 1));

  if (kind == "binom") {
    std::vector<mpz_class> coeffs;
    for (auto tok : tokens) coeffs.push_back(parse_integer(tok));
    return IntegerValuedPoly(std::move(coeffs));
  }
  if (kind == "rat") {
    std::vector<mpq_class> mono;
    for (auto tok : tokens) mono.push_back(parse_rational(tok));
    while (!mono.empty() && mono.back() == 0) mono.pop_back();
    if (mono.size() < 2) throw ValidationError("polynomial must have degree >= 1");

    // Values at 0..d, then forward differences give the binomial coefficients.
    const std::size_t d = mono.size() - 1;
    std::vector<mpq_class> values;
    for (std::size_t x = 0; x <= d; ++x) {
      mpq_class acc = 0;
      for (auto it = mono.rbegin(); it != mono.rend(); ++it) acc = acc * static_cast<long>(x) + *it;
      acc.canonicalize();
      if (acc.get_den() != 1) {
        throw ValidationError("polynomial is not integer-valued: f(" + std::to_string(x) + ") = " + acc.get_str());
      }
      values.push_back(acc);
    }
    std::vector<mpz_class> binom;
    for (std::size_t k = 0; k <= d; ++k) {
      binom.push_back(values[0].get_num());
      for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
      values.pop_back();
    }
    return IntegerValuedPoly(std::move(binom));
  }
  throw ValidationError("unknown polynomial format '" + std::string(kind) + "'");
}

mpz_class fixed_divisor(const IntegerValuedPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f.binom_coeffs()) g = gcd(g, c);
  return g;
}

mpz_class pi_f(const IntegerValuedPoly& f) {
  mpz_class g = 0;
  const auto& c = f.binom_coeffs();
  for (std::size_t k = 1; k < c.size(); ++k) g = gcd(g, c[k]);
  return g;
}

std::string Admissibility::reason() const {
  if (!leading_positive) return "leading coefficient must be positive";
  if (fixed_divisor != 1) return "fixed divisor " + fixed_divisor.get_str() + " != 1";
  if (first_nonpositive != 0) return "f(" + std::to_string(first_nonpositive) + ") <= 0";
  return {};
}

Admissibility check_admissible(const IntegerValuedPoly& f) {
  Admissibility result;
  result.fixed_divisor = fixed_divisor(f);
  result.leading_positive = sgn(f.binom_coeffs().back()) > 0;
  if (!result.leading_positive) return result;
  // Beyond the root bound f keeps the sign of its leading coefficient.
  const std::int64_t limit = to_int64(cauchy_bound(f.monomial_coeffs()), "positivity bound") + 1;
  for (std::int64_t l = 1; l <= limit; ++l) {
    if (sgn(f(l)) <= 0) {
      result.first_nonpositive = l;
      break;
    }
  }
  return result;
}

void require_admissible(const IntegerValuedPoly& f) {
  auto adm = check_admissible(f);
  if (!adm.ok()) throw ValidationError("inadmissible polynomial: " + adm.reason());
}

std::int64_t f_hat_inverse(const IntegerValuedPoly& f, std::int64_t delta) {
  if (delta < 1) throw ValidationError("delta must be positive");
  if (delta == 1) return 1;
  mpz_class d(static_cast<long>(delta));
  if (pi_f(f) % d != 0) {
    throw ValidationError("delta " + std::to_string(delta) + " does not divide Pi_f = " + pi_f(f).get_str());
  }
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), f.constant_term().get_mpz_t(), d.get_mpz_t()) == 0) {
    throw ValidationError("gcd(f(0), delta) != 1");
  }
  if (inv <= 0) inv += d;
  return inv.get_si();
}

std::vector<Part> parts_up_to(const IntegerValuedPoly& f, std::int64_t N) {
  if (sgn(f.binom_coeffs().back()) <= 0) throw ValidationError("leading coefficient must be positive");
  std::vector<Part> parts;
  if (N < 1) return parts;
  const mpz_class bound(static_cast<long>(N));
  for (std::int64_t l = 1;; ++l) {
    mpz_class v = f(l);
    if (v <= bound) {
      if (sgn(v) > 0) parts.push_back({l, v.get_si()});
    } else if (l >= f.increasing_from()) {
      break;
    }
  }
  return parts;
}

ValueCount count_values_upto(const IntegerValuedPoly& f, double t) {
  ValueCount out{0, 0.0};
  if (t >= 1.0) out.count = static_cast<std::int64_t>(parts_up_to(f, static_cast<std::int64_t>(std::floor(t))).size());
  const double r = f.degree();
  out.estimate = std::pow(t / f.leading_coeff().get_d(), 1.0 / r);
  return out;
}

std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n) {
  std::vector<std::pair<mpz_class, int>> out;
  mpz_class m = abs(n);
  for (mpz_class p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polypart
