// One line per acceptance criterion: [PASS]/[FAIL], measured values, wall time.
// Usage: acceptance [--only N]

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polypart/commands.hpp"
#include "polypart/counting.hpp"
#include "polypart/expsum.hpp"
#include "polypart/filter.hpp"
#include "polypart/saddle.hpp"

using namespace polypart;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

Outcome oracle_equivalence() {
  std::int64_t compared = 0;
  for (const char* text : {"rat:0,1", "rat:0,0,1", "rat:1,2", "rat:0,1/2,1/2"}) {
    const auto f = parse_poly(text);
    const auto table = build_table(f, 60);
    const auto matrix = build_parts_matrix(f, 60, 60);
    for (std::int64_t n = 0; n <= 60; ++n) {
      const auto bf = brute_force(f, n);
      if (bf.total != table[n]) return {false, std::string(text) + " p_f(" + std::to_string(n) + ") differs"};
      for (std::int64_t m = 0; m <= 60; ++m) {
        const auto it = bf.by_parts.find(m);
        const mpz_class want = it == bf.by_parts.end() ? mpz_class(0) : it->second;
        if (matrix.at(m, n) != want) {
          return {false, std::string(text) + " p_f(" + std::to_string(m) + "," + std::to_string(n) + ") differs"};
        }
        ++compared;
      }
    }
  }
  return {true, std::to_string(compared) + " entries equal"};
}

Outcome residue_vs_matrix() {
  for (const char* text : {"rat:0,1", "rat:0,0,1", "rat:1,2", "rat:0,1/2,1/2", "rat:5,6"}) {
    const auto f = parse_poly(text);
    const auto matrix = build_parts_matrix(f, 200, 200);
    for (std::int64_t K = 1; K <= 6; ++K) {
      const auto residues = build_residue_table(f, K, 200);
      for (std::int64_t n = 0; n <= 200; ++n) {
        for (std::int64_t a = 0; a < K; ++a) {
          mpz_class sum = 0;
          for (std::int64_t m = a; m <= 200; m += K) sum += matrix.at(m, n);
          if (residues.at(a, n) != sum) {
            return {false, std::string(text) + " K=" + std::to_string(K) + " n=" + std::to_string(n)};
          }
        }
      }
    }
  }
  return {true, "5 polynomials, K <= 6, n <= 200"};
}

Outcome vanishing_and_collapse() {
  struct Case {
    const char* poly;
    std::int64_t delta;
  };
  std::int64_t zeros = 0;
  std::int64_t collapses = 0;
  for (const Case c : {Case{"rat:1,2", 2}, Case{"rat:5,6", 2}, Case{"rat:5,6", 3}, Case{"rat:5,6", 6}}) {
    const auto f = parse_poly(c.poly);
    const auto table = build_table(f, 500);
    const mpz_class f0 = f.constant_term();
    for (std::int64_t k = 1; k <= 4; ++k) {
      const auto residues = build_residue_table(f, c.delta * k, 500);
      for (std::int64_t n = 0; n <= 500; ++n) {
        for (std::int64_t a = 0; a < c.delta * k; ++a) {
          const mpz_class diff = n - a * f0;
          const bool on = mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(c.delta)) != 0;
          if (!on) {
            if (residues.at(a, n) != 0) return {false, std::string(c.poly) + " nonzero off the progression"};
            ++zeros;
          } else if (k == 1) {
            if (residues.at(a, n) != table[n]) return {false, std::string(c.poly) + " no collapse"};
            ++collapses;
          }
        }
      }
    }
  }
  return {true, std::to_string(zeros) + " zeros, " + std::to_string(collapses) + " collapses"};
}

Outcome filter_identity() {
  struct Case {
    const char* poly;
    std::int64_t a, k, delta;
  };
  double worst = 0.0;
  for (const Case c : {Case{"rat:0,1", 1, 2, 1}, Case{"rat:0,1", 2, 5, 1}, Case{"rat:0,0,1", 1, 2, 1},
                       Case{"rat:1,2", 1, 3, 2}}) {
    worst = std::max(worst, verify_filter_identity(parse_poly(c.poly), c.a, c.k, c.delta, 300).max_rel_discrepancy);
  }
  return {worst <= 1e-6, "max relative discrepancy " + fmt(worst) + " (limit 1e-6)"};
}

Outcome equidistribution_trend() {
  struct Case {
    const char* poly;
    std::int64_t k;
  };
  const std::vector<std::int64_t> schedule{500, 1000, 2000, 4000, 5000};
  bool pass = true;
  std::string detail;
  for (const Case c : {Case{"rat:0,0,1", 2}, Case{"rat:0,1", 3}}) {
    const auto f = parse_poly(c.poly);
    const auto table = build_table(f, 5000);
    const auto residues = build_residue_table(f, c.k, 5000);
    std::vector<double> dev;
    for (std::int64_t n : schedule) {
      double worst = 0.0;
      for (std::int64_t a = 0; a < c.k; ++a) {
        const mpq_class r = mpq_class(residues.at(a, n) * c.k, table[n]) - 1;
        worst = std::max(worst, std::abs(r.get_d()));
      }
      dev.push_back(worst);
    }
    int rises = 0;
    for (std::size_t i = 1; i < dev.size(); ++i) rises += dev[i] >= dev[i - 1] ? 1 : 0;
    const bool ok = dev.back() < 0.5 * dev.front() && rises <= 1;
    pass = pass && ok;
    detail += std::string(detail.empty() ? "" : "; ") + c.poly + " k=" + std::to_string(c.k) + ": " + fmt(dev.front()) +
              " -> " + fmt(dev.back()) + ", rises " + std::to_string(rises);
  }
  return {pass, detail};
}

Outcome saddle_solver() {
  double worst = 0.0;
  for (const char* text : {"rat:0,1", "rat:0,0,1", "rat:1,2", "rat:0,1/2,1/2"}) {
    const auto f = parse_poly(text);
    for (double n : {500.0, 1000.0, 2000.0, 4000.0, 5000.0, 10000.0}) {
      worst = std::max(worst, solve_saddle(f, n).residual / n);
    }
  }
  const double x = solve_saddle(parse_poly("rat:0,1"), 1e4).x;
  const double closed = std::numbers::pi / std::sqrt(6e4);
  const double rel = std::abs(x / closed - 1.0);
  return {worst <= 1e-9 && rel <= 0.05,
          "max residual/n " + fmt(worst) + ", x(1e4) off closed form by " + fmt(100 * rel) + "%"};
}

Outcome leading_term() {
  bool pass = true;
  std::string detail;
  for (const char* text : {"rat:0,1", "rat:0,0,1"}) {
    const auto f = parse_poly(text);
    const auto table = build_table(f, 4000);
    auto ratio = [&](std::int64_t n) {
      return std::exp(asymptotic_log_pf(f, static_cast<double>(n)) - log_mpz(table[n]));
    };
    const double r500 = ratio(500);
    const double r2000 = ratio(2000);
    const double r4000 = ratio(4000);
    pass = pass && r2000 >= 0.8 && r2000 <= 1.2 && std::abs(r4000 - 1) < std::abs(r500 - 1);
    detail += std::string(detail.empty() ? "" : "; ") + text + ": " + fmt(r500) + ", " + fmt(r2000) + ", " + fmt(r4000);
  }
  return {pass, "ratio at 500, 2000, 4000 for " + detail};
}

Outcome complete_sums() {
  std::int64_t rows = 0;
  std::int64_t violations = 0;
  std::string where;
  for (const char* text : {"rat:0,1", "rat:0,0,1", "rat:0,1/2,1/2", "rat:1,2", "rat:5,6"}) {
    const auto scan = check_complete_sum_bound(parse_poly(text), 60);
    rows += static_cast<std::int64_t>(scan.rows.size());
    violations += scan.violations;
    for (const auto& r : scan.rows) {
      if (!r.pass) {
        where += std::string(" ") + text + " h=" + std::to_string(r.h) + " d=" + std::to_string(r.d) + " |S|^2=" +
                 fmt(r.modulus2) + " bound=" + fmt(r.bound);
      }
    }
  }
  return {violations == 0, std::to_string(rows) + " (h, d) pairs, " + std::to_string(violations) + " violations" +
                               (where.empty() ? "" : ":" + where)};
}

// -log |G_f(zeta_{delta k}^j, zeta_delta^m e^{-x - 2 pi i y}) / G_f(x)|^2 as a literal complex product.
double F_literal(const IntegerValuedPoly& f, std::int64_t k, std::int64_t delta, std::int64_t j, std::int64_t m,
                 double x, double y) {
  auto e = [](double t) { return std::polar(1.0, 2.0 * std::numbers::pi * t); };
  double acc = 0.0;
  for (std::int64_t n = 1;; ++n) {
    const long v = f(n).get_si();
    if (v * x > 60.0) break;
    const double r = std::exp(-v * x);
    const auto w = e(static_cast<double>(j) / static_cast<double>(delta * k)) *
                   e(static_cast<double>((m * v) % delta) / static_cast<double>(delta)) * e(-std::fmod(v * y, 1.0)) * r;
    acc += std::log(std::norm(1.0 - w)) - 2.0 * std::log1p(-r);
  }
  return acc;
}

Outcome f_cross_check() {
  struct Setting {
    const char* poly;
    std::int64_t delta;
  };
  const Setting settings[] = {{"rat:0,1", 1}, {"rat:0,0,1", 1}, {"rat:1,2", 2}, {"rat:5,6", 6}, {"rat:0,1/2,1/2", 1}};
  std::mt19937 rng(20240601);
  std::uniform_real_distribution<double> xs(0.05, 0.5);
  std::uniform_real_distribution<double> ys(-0.5, 0.5);
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const Setting s = settings[draw % 5];
    const auto f = parse_poly(s.poly);
    const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 5);
    const std::int64_t j = 1 + static_cast<std::int64_t>(rng() % static_cast<unsigned>(k - 1));
    const std::int64_t ell = static_cast<std::int64_t>(rng() % static_cast<unsigned>(s.delta));
    const double x = xs(rng);
    const double y = ys(rng);
    const double series = F_value(f, {k, s.delta, j, ell}, x, y);
    // twist ell/delta on the series side is zeta_delta^{ell h} on q, h f(0) = 1 mod delta
    const std::int64_t m = (ell * f_hat_inverse(f, s.delta)) % s.delta;
    const double literal = F_literal(f, k, s.delta, j, m, x, y);
    worst = std::max(worst, std::abs(series - literal) / std::max(1.0, std::abs(literal)));
  }
  return {worst <= 1e-8, "20 draws, max relative difference " + fmt(worst) + " (limit 1e-8)"};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> runs = {
      {"verify", "--poly", "rat:0,1"},
      {"verify", "--poly", "rat:5,6", "--delta", "6", "--k", "3"},
      {"verify", "--poly", "rat:0,0,1", "--format", "json"},
  };
  for (const auto& args : runs) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      std::ostringstream out;
      std::ostringstream err;
      cli::run(args, out, err);
      if (rep == 0) {
        first = out.str();
      } else if (out.str() != first || first.empty()) {
        return {false, "verify output differs between runs for " + args[2]};
      }
    }
  }
  return {true, "3 configurations, byte-identical reports"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence, n <= 60", 10, oracle_equivalence},
      {2, "residue DP equals m-summed parts matrix", 30, residue_vs_matrix},
      {3, "vanishing off the progression and collapse at k = 1", 0, vanishing_and_collapse},
      {4, "roots-of-unity filter identity at N = 300", 60, filter_identity},
      {5, "equidistribution trend to n = 5000", 120, equidistribution_trend},
      {6, "saddle-point solver", 5, saddle_solver},
      {7, "leading asymptotic term", 120, leading_term},
      {8, "complete-sum bound, h <= 60", 10, complete_sums},
      {9, "series and product forms of F", 10, f_cross_check},
      {10, "verify is deterministic", 0, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      o.pass = false;
      o.detail += "; over the " + fmt(c.time_limit) + " s limit";
    }
    std::printf("[%s] AC%d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
