#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polypart/counting.hpp"
#include "polypart/errors.hpp"
#include "polypart/saddle.hpp"

using namespace polypart;

namespace {

double direct_sum(const IntegerValuedPoly& f, double x, int order, std::int64_t terms) {
  double s = 0.0;
  for (std::int64_t l = 1; l <= terms; ++l) {
    const double v = f(l).get_d();
    if (v * x > 700.0) break;
    const double ex = std::expm1(v * x);
    if (order == 0) s += -std::log1p(-std::exp(-v * x));
    if (order == 1) s += v / ex;
    if (order == 2) s += v * v * std::exp(-v * x) / std::pow(-std::expm1(-v * x), 2);
  }
  return s;
}

}  // namespace

TEST_CASE("saddle sums against direct summation") {
  const auto id = parse_poly("rat:0,1");
  for (int order = 0; order <= 2; ++order) {
    const double want = direct_sum(id, 1.0, order, 2000);
    CHECK(saddle_sum(id, 1.0, order).value == doctest::Approx(want).epsilon(1e-12));
  }
  const auto sq = parse_poly("rat:0,0,1");
  for (double x : {0.01, 0.3, 2.0}) {
    for (int order = 0; order <= 2; ++order) {
      CHECK(saddle_sum(sq, x, order).value == doctest::Approx(direct_sum(sq, x, order, 5000)).epsilon(1e-11));
    }
  }
}

TEST_CASE("saddle sums at the ends of the range") {
  const auto id = parse_poly("rat:0,1");
  // Only l = 1 matters for large x.
  CHECK(saddle_sum(id, 20.0, 1).value == doctest::Approx(std::exp(-20.0)).epsilon(1e-6));
  // sum l/(e^{lx} - 1) ~ zeta(2)/x^2 as x -> 0
  const double x = 1e-3;
  CHECK(x * x * saddle_sum(id, x, 1).value == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-3));
  CHECK_THROWS_AS(saddle_sum(id, 0.0, 1), ValidationError);
  CHECK_THROWS_AS(saddle_sum(id, -1.0, 0), ValidationError);
  CHECK_THROWS_AS(saddle_sum(id, 1.0, 3), ValidationError);
}

TEST_CASE("property: orders are successive derivatives") {
  for (const char* text : {"rat:0,1", "rat:0,0,1", "rat:1,2", "rat:0,1/2,1/2"}) {
    const auto f = parse_poly(text);
    for (double x : {0.05, 0.1, 0.5}) {
      const double h = 1e-5 * x;
      const double d0 = (saddle_sum(f, x + h, 0).value - saddle_sum(f, x - h, 0).value) / (2 * h);
      const double d1 = (saddle_sum(f, x + h, 1).value - saddle_sum(f, x - h, 1).value) / (2 * h);
      CAPTURE(text);
      CAPTURE(x);
      CHECK(-d0 == doctest::Approx(saddle_sum(f, x, 1).value).epsilon(1e-5));
      CHECK(-d1 == doctest::Approx(saddle_sum(f, x, 2).value).epsilon(1e-5));
    }
  }
}

TEST_CASE("property: doubling the cutoff changes nothing visible") {
  for (const char* text : {"rat:0,1", "rat:0,0,1", "rat:5,6"}) {
    const auto f = parse_poly(text);
    for (double x : {1e-3, 0.02, 0.7}) {
      for (int order = 0; order <= 2; ++order) {
        const auto base = saddle_sum(f, x, order);
        const auto wide = saddle_sum(f, x, order, 80.0);
        CHECK(std::abs(base.value - wide.value) <= 1e-12 * std::abs(wide.value));
        // allow for rounding in the longer sum
        CHECK(std::abs(base.value - wide.value) <= base.tail_bound + 1e-14 * std::abs(wide.value));
      }
    }
  }
}

TEST_CASE("riemann_zeta and the leading constant") {
  for (double s : {1.1, 1.5, 2.0, 4.0 / 3.0, 3.0, 7.5}) {
    CHECK(riemann_zeta(s) == doctest::Approx(std::riemann_zeta(s)).epsilon(1e-12));
  }
  CHECK(leading_constant(parse_poly("rat:0,1")) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6));
  // c_1(4x^2) = c_1(x^2) / 2
  CHECK(leading_constant(parse_poly("rat:0,0,4")) ==
        doctest::Approx(leading_constant(parse_poly("rat:0,0,1")) / 2));
}

TEST_CASE("solve_saddle") {
  const auto id = parse_poly("rat:0,1");
  const auto sp = solve_saddle(id, 1e4);
  CHECK(sp.x == doctest::Approx(std::numbers::pi / std::sqrt(6e4)).epsilon(0.05));
  CHECK(sp.residual <= 1e-9 * 1e4);
  CHECK_THROWS_AS(solve_saddle(id, 0.0), ValidationError);

  for (const char* text : {"rat:0,1", "rat:0,0,1", "rat:0,0,0,1", "rat:5,6"}) {
    const auto f = parse_poly(text);
    double prev = std::numeric_limits<double>::infinity();
    for (double n : {10.0, 100.0, 1e3, 1e4, 1e5, 1e6}) {
      const auto p = solve_saddle(f, n);
      CHECK(p.residual <= 1e-9 * n);
      CHECK(p.x < prev);
      CHECK(p.a2 > 0.0);
      prev = p.x;
    }
  }
}

TEST_CASE("saddle-point asymptotic against exact counts") {
  const auto id = parse_poly("rat:0,1");
  const auto sq = parse_poly("rat:0,0,1");
  const auto t1 = build_table(id, 4000);
  const auto t2 = build_table(sq, 4000);

  auto ratio = [](const PartitionTable& t, const IntegerValuedPoly& f, std::int64_t n) {
    return std::exp(asymptotic_log_pf(f, static_cast<double>(n)) - log_mpz(t[n]));
  };
  const double r1 = ratio(t1, id, 1000);
  CHECK(r1 >= 0.9);
  CHECK(r1 <= 1.1);
  const double r2 = ratio(t2, sq, 2000);
  CHECK(r2 >= 0.8);
  CHECK(r2 <= 1.2);
  CHECK(std::abs(ratio(t1, id, 4000) - 1) < std::abs(ratio(t1, id, 500) - 1));
  CHECK(std::abs(ratio(t2, sq, 4000) - 1) < std::abs(ratio(t2, sq, 500) - 1));
}

TEST_CASE("log p_f(n) / n^{1/(r+1)} settles") {
  const auto sq = parse_poly("rat:0,0,1");
  const auto t = build_table(sq, 8000);
  auto g = [&](std::int64_t n) { return log_mpz(t[n]) / std::cbrt(static_cast<double>(n)); };
  const double d1 = std::abs(g(2000) - g(1000));
  const double d2 = std::abs(g(4000) - g(2000));
  const double d3 = std::abs(g(8000) - g(4000));
  CHECK(d2 < d1);
  CHECK(d3 < d2);
}

TEST_CASE("log_mpz") {
  CHECK(log_mpz(mpz_class(1)) == 0.0);
  CHECK(log_mpz(mpz_class(1000)) == doctest::Approx(std::log(1000.0)));
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 5000);
  CHECK(log_mpz(big) == doctest::Approx(5000 * std::log(10.0)).epsilon(1e-14));
}
