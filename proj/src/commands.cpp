#include "polypart/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <tuple>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "polypart/counting.hpp"
#include "polypart/errors.hpp"
#include "polypart/expsum.hpp"
#include "polypart/filter.hpp"
#include "polypart/ivpoly.hpp"
#include "polypart/phase.hpp"
#include "polypart/saddle.hpp"
#include "polypart/table_io.hpp"

namespace polypart::cli {

namespace {

constexpr const char* kJsonSchema = "polypart-output/1";
constexpr double kFilterTolerance = 1e-6;

struct RunConfig {
  std::string poly = "rat:0,1";
  std::int64_t N = 0;
  std::int64_t k = 1;
  std::int64_t delta = 1;
  std::vector<std::int64_t> a_list;
  std::int64_t h_max = 60;
  std::int64_t vanish_N = 500;
  std::int64_t grid = 1000;
  double x = 0.1;
  std::string out_path;
  std::string format = "csv";
  bool tamper = false;
};

using Cell = std::variant<std::string, std::int64_t, double>;

struct Output {
  std::string command;
  std::string poly;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return std::to_string(v);
        }
      },
      c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

void emit(const Output& o, const std::string& format, std::ostream& os) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = kJsonSchema;
    j["command"] = o.command;
    if (!o.poly.empty()) j["poly"] = o.poly;
    j["columns"] = o.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : o.rows) {
      auto row = nlohmann::ordered_json::array();
      for (const auto& c : r) row.push_back(cell_json(c));
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    auto summary = nlohmann::ordered_json::object();
    for (const auto& [key, value] : o.summary) summary[key] = cell_json(value);
    j["summary"] = std::move(summary);
    os << j.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < o.columns.size(); ++i) os << (i ? "," : "") << o.columns[i];
  os << '\n';
  for (const auto& r : o.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell_text(r[i]);
    os << '\n';
  }
  if (!o.summary.empty()) {
    os << "# summary";
    for (const auto& [key, value] : o.summary) os << ' ' << key << '=' << cell_text(value);
    os << '\n';
  }
}

IntegerValuedPoly admissible_poly(const RunConfig& cfg) {
  auto f = parse_poly(cfg.poly);
  require_admissible(f);
  return f;
}

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw ValidationError(std::string(name) + " must be positive");
}

/// Every prime p | k must satisfy p delta not dividing Pi_f.
void require_equidistribution_hypotheses(const IntegerValuedPoly& f, std::int64_t k, std::int64_t delta) {
  require_delta_divides_pi(f, delta);
  const mpz_class pi = pi_f(f);
  for (const auto& [p, e] : factorize(mpz_class(static_cast<long>(k)))) {
    if (pi % (p * delta) == 0) {
      throw ValidationError("prime " + p.get_str() + " | k but " + p.get_str() + "*delta divides Pi_f = " +
                            pi.get_str());
    }
  }
}

std::vector<std::int64_t> geometric_schedule(std::int64_t N) {
  std::vector<std::int64_t> s;
  for (std::int64_t n = 500; n < N; n *= 2) s.push_back(n);
  s.push_back(N);
  return s;
}

bool on_progression(const IntegerValuedPoly& f, std::int64_t a, std::int64_t n, std::int64_t delta) {
  return mod_floor(mpz_class(static_cast<long>(n)) - a * f.constant_term(), delta) == 0;
}

Output cmd_count(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const auto f = admissible_poly(cfg);
  require_positive(cfg.N, "--N");
  if (cfg.N > 100000) err << "warning: N > 1e5 may need a lot of memory\n";
  const auto table = build_table(f, cfg.N);
  std::optional<ResidueTable> residues;
  if (cfg.k > 1 || cfg.delta > 1) {
    require_delta_divides_pi(f, cfg.delta);
    residues = build_residue_table(f, cfg.delta * cfg.k, cfg.N);
  }
  const ResidueTable* rp = residues ? &*residues : nullptr;
  if (cfg.format == "table") {
    write_table(os, table, rp);
    return {};
  }
  Output o{"count", f.canonical_text(), {"n", "p_f"}, {}, {}};
  if (rp) {
    for (std::int64_t a = 0; a < rp->K; ++a) o.columns.push_back("a=" + std::to_string(a));
  }
  for (std::int64_t n = 0; n <= cfg.N; ++n) {
    std::vector<Cell> row{n, table[n].get_str()};
    if (rp) {
      for (std::int64_t a = 0; a < rp->K; ++a) row.emplace_back(rp->at(a, n).get_str());
    }
    o.rows.push_back(std::move(row));
  }
  return o;
}

Output cmd_mod_table(const RunConfig& cfg) {
  const auto f = admissible_poly(cfg);
  require_positive(cfg.N, "--N");
  require_positive(cfg.k, "--k");
  require_delta_divides_pi(f, cfg.delta);
  const std::int64_t K = cfg.delta * cfg.k;
  const auto table = build_table(f, cfg.N);
  const auto residues = build_residue_table(f, K, cfg.N);
  Output o{"mod-table", f.canonical_text(), {"n", "p_f"}, {}, {}};
  for (std::int64_t a = 0; a < K; ++a) o.columns.push_back("a=" + std::to_string(a));
  for (std::int64_t n = 0; n <= cfg.N; ++n) {
    std::vector<Cell> row{n, table[n].get_str()};
    for (std::int64_t a = 0; a < K; ++a) row.emplace_back(residues.at(a, n).get_str());
    o.rows.push_back(std::move(row));
  }
  o.summary = {{"K", K}};
  return o;
}

Output cmd_verify_filter(const RunConfig& cfg) {
  const auto f = admissible_poly(cfg);
  require_positive(cfg.N, "--N");
  require_positive(cfg.k, "--k");
  const std::int64_t a = cfg.a_list.empty() ? 1 : cfg.a_list.front();
  const auto report = verify_filter_identity(f, a, cfg.k, cfg.delta, cfg.N);
  Output o{"verify-filter", f.canonical_text(),
           {"n", "lhs_exact", "rhs_real", "rhs_imag", "abs_error", "rel_error"}, {}, {}};
  for (const auto& r : report.rows) {
    o.rows.push_back({r.n, r.lhs.get_str(), r.rhs.real(), r.rhs.imag(), r.abs_error, r.rel_error});
  }
  const bool pass = report.max_rel_discrepancy <= kFilterTolerance;
  o.summary = {{"a", a},
               {"k", cfg.k},
               {"delta", cfg.delta},
               {"max_rel_discrepancy", report.max_rel_discrepancy},
               {"max_rel_imag", report.max_rel_imag},
               {"pass", std::int64_t{pass}}};
  return o;
}

Output cmd_equi_ratio(const RunConfig& cfg, std::ostream& err) {
  const auto f = admissible_poly(cfg);
  require_positive(cfg.N, "--N");
  require_positive(cfg.k, "--k");
  require_equidistribution_hypotheses(f, cfg.k, cfg.delta);
  const std::int64_t K = cfg.delta * cfg.k;

  const double n = static_cast<double>(cfg.N);
  const double k_range = std::pow(n, 1.0 / (2.0 + 2.0 * f.degree())) / std::sqrt(std::log(std::max(n, 3.0)));
  if (static_cast<double>(cfg.k) > k_range) {
    err << "warning: k = " << cfg.k << " exceeds n^{1/(2+2r)}/sqrt(log n) = " << format_double(k_range)
        << " at n = " << cfg.N << "; tables remain exact\n";
  }

  std::vector<std::int64_t> as = cfg.a_list;
  if (as.empty()) {
    for (std::int64_t a = 0; a < K; ++a) as.push_back(a);
  }
  const auto table = build_table(f, cfg.N);
  const auto residues = build_residue_table(f, K, cfg.N);

  Output o{"equi-ratio", f.canonical_text(), {"n", "a", "ratio", "max_deviation"}, {}, {}};
  double last_dev = 0.0;
  for (std::int64_t m : geometric_schedule(cfg.N)) {
    // k p_f(a, delta k; m) / p_f(m) - 1, exact up to the final conversion
    std::vector<std::optional<double>> ratios;
    double max_dev = 0.0;
    for (std::int64_t a : as) {
      if (!on_progression(f, a, m, cfg.delta) || sgn(table[m]) == 0) {
        ratios.emplace_back();
        continue;
      }
      mpq_class dev(residues.at(a, m) * cfg.k - table[m], table[m]);
      dev.canonicalize();
      ratios.emplace_back(1.0 + dev.get_d());
      max_dev = std::max(max_dev, std::abs(dev.get_d()));
    }
    for (std::size_t i = 0; i < as.size(); ++i) {
      if (ratios[i]) {
        o.rows.push_back({m, as[i], *ratios[i], max_dev});
      } else {
        o.rows.push_back({m, as[i], std::string("zero-support"), max_dev});
      }
    }
    last_dev = max_dev;
  }
  o.summary = {{"k", cfg.k}, {"delta", cfg.delta}, {"final_max_deviation", last_dev}};
  return o;
}

Output cmd_asym(const RunConfig& cfg) {
  const auto f = admissible_poly(cfg);
  require_positive(cfg.N, "--N");
  const auto table = build_table(f, cfg.N);
  Output o{"asym", f.canonical_text(),
           {"n", "x", "residual", "A2", "log_gf", "log_asym", "log_exact", "ratio"}, {}, {}};
  for (std::int64_t n : geometric_schedule(cfg.N)) {
    const auto sp = solve_saddle(f, static_cast<double>(n));
    if (sgn(table[n]) == 0) {
      o.rows.push_back({n, sp.x, sp.residual, sp.a2, sp.log_gf, sp.log_asym, std::string("-inf"),
                        std::string("inf")});
      continue;
    }
    const double log_exact = log_mpz(table[n]);
    o.rows.push_back({n, sp.x, sp.residual, sp.a2, sp.log_gf, sp.log_asym, log_exact,
                      std::exp(sp.log_asym - log_exact)});
  }
  return o;
}

Output cmd_weyl_check(const RunConfig& cfg) {
  const auto f = admissible_poly(cfg);
  require_positive(cfg.h_max, "--h-max");
  const auto scan = check_complete_sum_bound(f, cfg.h_max);
  Output o{"weyl-check", f.canonical_text(), {"h", "d", "modulus2", "bound", "margin"}, {}, {}};
  for (const auto& r : scan.rows) o.rows.push_back({r.h, r.d, r.modulus2, r.bound, r.bound - r.modulus2});
  o.summary = {{"checked", static_cast<std::int64_t>(scan.rows.size())},
               {"skipped_h", scan.skipped_h},
               {"violations", scan.violations}};
  return o;
}

Output cmd_f_scan(const RunConfig& cfg) {
  const auto f = admissible_poly(cfg);
  const auto samples = f_scan_samples(f, cfg.k, cfg.delta, cfg.x, cfg.grid);
  const auto best = min_F_scan(f, cfg.k, cfg.delta, cfg.x, cfg.grid);
  Output o{"f-scan", f.canonical_text(), {"y", "j", "ell", "F"}, {}, {}};
  for (const auto& s : samples) o.rows.push_back({s.y, s.j, s.ell, s.F});
  o.summary = {{"min_F", best.min_F}, {"argmin_y", best.y}, {"argmin_j", best.j},
               {"argmin_ell", best.ell}, {"scale", best.scale}, {"ratio", best.ratio}};
  return o;
}

Output cmd_pi_f(const RunConfig& cfg) {
  const auto f = parse_poly(cfg.poly);
  const auto adm = check_admissible(f);
  Output o{"pi-f", f.canonical_text(), {"key", "value"}, {}, {}};
  auto add = [&](const std::string& key, Cell value) { o.rows.push_back({key, std::move(value)}); };
  add("binom", f.binom_text());
  add("rat", f.rational_text());
  add("degree", std::int64_t{f.degree()});
  add("leading_coeff", f.leading_coeff().get_str());
  add("f0", f.constant_term().get_str());
  add("fixed_divisor", adm.fixed_divisor.get_str());
  add("admissible", std::int64_t{adm.ok()});
  if (!adm.ok()) add("inadmissible_reason", adm.reason());
  const mpz_class pi = pi_f(f);
  add("pi_f", pi.get_str());
  std::string factors;
  for (const auto& [p, e] : factorize(pi)) {
    if (!factors.empty()) factors += " * ";
    factors += p.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
  }
  add("pi_f_factors", factors.empty() ? std::string("1") : factors);
  if (adm.ok() && pi.fits_slong_p()) {
    for (std::int64_t d : divisors(pi.get_si())) add("f_hat[" + std::to_string(d) + "]", f_hat_inverse(f, d));
  }
  return o;
}

// Runs the hard checks; each produces one row (check, status, detail).
Output cmd_verify(const RunConfig& cfg) {
  const auto f = admissible_poly(cfg);
  const std::int64_t a = cfg.a_list.empty() ? 1 : cfg.a_list.front();
  const std::int64_t filter_N = cfg.N > 0 ? cfg.N : 300;
  Output o{"verify", f.canonical_text(), {"check", "status", "detail"}, {}, {}};
  std::int64_t failures = 0;
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    o.rows.push_back({name, std::string(pass ? "PASS" : "FAIL"), detail});
  };

  {
    const auto report = verify_filter_identity(f, a, cfg.k, cfg.delta, filter_N);
    double worst = report.max_rel_discrepancy;
    if (cfg.tamper) worst += 1.0;
    record("filter-identity", worst <= kFilterTolerance,
           "a=" + std::to_string(a) + " k=" + std::to_string(cfg.k) + " delta=" + std::to_string(cfg.delta) +
               " N=" + std::to_string(filter_N) + " max_rel=" + format_double(worst));
  }

  const mpz_class pi = pi_f(f);
  if (!pi.fits_slong_p()) throw ValidationError("Pi_f too large for the vanishing scan");
  const auto table = build_table(f, cfg.vanish_N);
  for (std::int64_t delta : divisors(pi.get_si())) {
    for (std::int64_t kk = 1; kk <= 4; ++kk) {
      auto residues = build_residue_table(f, delta * kk, cfg.vanish_N);
      if (cfg.tamper) residues.entries[residues.entries.size() - 1] += 1;
      std::int64_t vanish_bad = 0;
      std::int64_t collapse_bad = 0;
      // K = delta: every class on the progression holds all of p_f(n).
      const bool collapse = kk == 1;
      for (std::int64_t n = 0; n <= cfg.vanish_N; ++n) {
        for (std::int64_t r = 0; r < delta * kk; ++r) {
          const bool on = on_progression(f, r, n, delta);
          if (!on && sgn(residues.at(r, n)) != 0) ++vanish_bad;
          if (on && collapse && residues.at(r, n) != table[n]) ++collapse_bad;
        }
      }
      const std::string tag = "delta=" + std::to_string(delta) + " k=" + std::to_string(kk);
      record("vanishing", vanish_bad == 0,
             tag + " N=" + std::to_string(cfg.vanish_N) + " nonzero_off_progression=" + std::to_string(vanish_bad));
      if (collapse) {
        record("collapse", collapse_bad == 0,
               tag + " N=" + std::to_string(cfg.vanish_N) + " mismatches=" + std::to_string(collapse_bad));
      }
    }
  }

  {
    const auto scan = check_complete_sum_bound(f, cfg.h_max);
    record("complete-sum-bound", scan.violations == 0,
           "h_max=" + std::to_string(cfg.h_max) + " checked=" + std::to_string(scan.rows.size()) +
               " violations=" + std::to_string(scan.violations));
  }
  o.summary = {{"checks", static_cast<std::int64_t>(o.rows.size())}, {"failures", failures}};
  return o;
}

std::vector<std::int64_t> parse_a_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw ValidationError("bad --a entry '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and numerical checks for partitions into polynomial parts", "polypart"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string a_text;

  // Subcommands share cfg, so defaults are applied after parsing and only for
  // the subcommand that ran; default_val would write them at declaration time.
  std::vector<std::tuple<CLI::App*, CLI::Option*, std::function<void()>>> defaults;
  auto with_default = [&](CLI::App* sub, CLI::Option* opt, auto& var, auto value) {
    std::ostringstream shown;
    shown << value;
    opt->default_str(shown.str());
    defaults.emplace_back(sub, opt, [&var, value] { var = value; });
  };

  auto add_poly = [&](CLI::App* sub) { sub->add_option("--poly", cfg.poly, "binom:c0,c1,... or rat:p0/q0,...")->required(); };
  auto add_out = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--out", cfg.out_path, "Output file (default: stdout)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* count = app.add_subcommand("count", "Exact p_f(0..N), optionally with residue columns");
  add_poly(count);
  count->add_option("--N", cfg.N, "Largest n")->required();
  count->add_option("--k", cfg.k, "Residue modulus factor (K = delta k)");
  count->add_option("--delta", cfg.delta, "Divisor of Pi_f");
  add_out(count, {"csv", "json", "table"});

  auto* mod_table = app.add_subcommand("mod-table", "Exact p_f(a, delta k; n) for all residues a");
  add_poly(mod_table);
  mod_table->add_option("--N", cfg.N, "Largest n")->required();
  mod_table->add_option("--k", cfg.k, "k")->required();
  mod_table->add_option("--delta", cfg.delta, "Divisor of Pi_f");
  add_out(mod_table, {"csv", "json"});

  auto* verify_filter = app.add_subcommand("verify-filter", "Roots-of-unity filter identity, per n");
  add_poly(verify_filter);
  with_default(verify_filter, verify_filter->add_option("--N", cfg.N, "Largest n"), cfg.N, std::int64_t{300});
  with_default(verify_filter, verify_filter->add_option("--k", cfg.k, "k"), cfg.k, std::int64_t{2});
  verify_filter->add_option("--delta", cfg.delta, "Divisor of Pi_f");
  with_default(verify_filter, verify_filter->add_option("--a", a_text, "Residue a"), a_text, std::string("1"));
  add_out(verify_filter, {"csv", "json"});

  auto* equi = app.add_subcommand("equi-ratio", "k p_f(a, delta k; n) / p_f(n) along a geometric n schedule");
  add_poly(equi);
  with_default(equi, equi->add_option("--N", cfg.N, "Largest n"), cfg.N, std::int64_t{5000});
  equi->add_option("--k", cfg.k, "k")->required();
  equi->add_option("--delta", cfg.delta, "Divisor of Pi_f");
  equi->add_option("--a", a_text, "Comma-separated residues (default: all)");
  add_out(equi, {"csv", "json"});

  auto* asym = app.add_subcommand("asym", "Saddle point and leading asymptotic vs exact p_f(n)");
  add_poly(asym);
  with_default(asym, asym->add_option("--N", cfg.N, "Largest n"), cfg.N, std::int64_t{4000});
  add_out(asym, {"csv", "json"});

  auto* weyl = app.add_subcommand("weyl-check", "Complete exponential sum bound scan");
  add_poly(weyl);
  with_default(weyl, weyl->add_option("--h-max", cfg.h_max, "Largest denominator h"), cfg.h_max, std::int64_t{60});
  add_out(weyl, {"csv", "json"});

  auto* fscan = app.add_subcommand("f-scan", "F(x, y) over a y-grid and its minimum");
  add_poly(fscan);
  with_default(fscan, fscan->add_option("--k", cfg.k, "k"), cfg.k, std::int64_t{2});
  fscan->add_option("--delta", cfg.delta, "Divisor of Pi_f");
  with_default(fscan, fscan->add_option("--x", cfg.x, "x > 0"), cfg.x, 0.1);
  with_default(fscan, fscan->add_option("--grid", cfg.grid, "Uniform grid size"), cfg.grid, std::int64_t{1000});
  add_out(fscan, {"csv", "json"});

  auto* pif = app.add_subcommand("pi-f", "Invariants of f: degree, fixed divisor, Pi_f, inverses of f(0)");
  add_poly(pif);
  add_out(pif, {"csv", "json"});

  auto* verify = app.add_subcommand("verify", "Hard checks: filter identity, vanishing, collapse, complete sums");
  add_poly(verify);
  with_default(verify, verify->add_option("--N", cfg.N, "Largest n for the filter identity"), cfg.N, std::int64_t{300});
  with_default(verify, verify->add_option("--k", cfg.k, "k for the filter identity"), cfg.k, std::int64_t{2});
  verify->add_option("--delta", cfg.delta, "delta for the filter identity");
  with_default(verify, verify->add_option("--a", a_text, "Residue a for the filter identity"), a_text, std::string("1"));
  with_default(verify, verify->add_option("--h-max", cfg.h_max, "Largest h for the complete-sum scan"), cfg.h_max, std::int64_t{60});
  with_default(verify, verify->add_option("--vanish-N", cfg.vanish_N, "Largest n for vanishing/collapse"), cfg.vanish_N, std::int64_t{500});
  verify->add_flag("--tamper", cfg.tamper, "Test hook: corrupt the computed tables")->group("");
  add_out(verify, {"csv", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (const auto& [sub, opt, apply] : defaults) {
      if (sub->parsed() && opt->count() == 0) apply();
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << cfg.out_path << "' for writing\n";
      return kExitValidation;
    }
    os = &file;
  }

  try {
    if (!a_text.empty()) cfg.a_list = parse_a_list(a_text);
    Output o;
    bool failed = false;
    if (count->parsed()) {
      o = cmd_count(cfg, *os, err);
      if (cfg.format == "table") return kExitOk;
    } else if (mod_table->parsed()) {
      o = cmd_mod_table(cfg);
    } else if (verify_filter->parsed()) {
      o = cmd_verify_filter(cfg);
      failed = std::get<std::int64_t>(o.summary.back().second) == 0;
    } else if (equi->parsed()) {
      o = cmd_equi_ratio(cfg, err);
    } else if (asym->parsed()) {
      o = cmd_asym(cfg);
    } else if (weyl->parsed()) {
      o = cmd_weyl_check(cfg);
      failed = std::get<std::int64_t>(o.summary.back().second) != 0;
    } else if (fscan->parsed()) {
      o = cmd_f_scan(cfg);
    } else if (pif->parsed()) {
      o = cmd_pi_f(cfg);
    } else if (verify->parsed()) {
      o = cmd_verify(cfg);
      failed = std::get<std::int64_t>(o.summary.back().second) != 0;
    }
    emit(o, cfg.format, *os);
    if (failed) {
      err << "error: mathematical check failed (" << o.command << ")\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace polypart::cli
