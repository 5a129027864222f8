#include "polypart/table_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "polypart/errors.hpp"

namespace polypart {

namespace {

void check_shapes(const PartitionTable& table, const ResidueTable* residues) {
  if (residues && (residues->N != table.N || !(residues->poly == table.poly))) {
    throw ValidationError("residue table does not match partition table");
  }
}

std::string next_line(std::istream& is, const char* what) {
  std::string line;
  if (!std::getline(is, line)) throw ValidationError(std::string("table truncated before ") + what);
  return line;
}

std::string expect_key(const std::string& line, const std::string& key) {
  if (line.rfind(key + " ", 0) != 0) throw ValidationError("expected '" + key + "' line, got '" + line + "'");
  return line.substr(key.size() + 1);
}

}  // namespace

void write_table(std::ostream& os, const PartitionTable& table, const ResidueTable* residues) {
  check_shapes(table, residues);
  const std::int64_t K = residues ? residues->K : 0;
  os << "polypart-table " << kTableFormatVersion << '\n';
  os << "poly " << table.poly.canonical_text() << '\n';
  os << "N " << table.N << '\n';
  os << "K " << K << '\n';
  os << "columns n p_f";
  for (std::int64_t a = 0; a < K; ++a) os << " a" << a;
  os << '\n';
  for (std::int64_t n = 0; n <= table.N; ++n) {
    os << n << ' ' << table[n].get_str();
    for (std::int64_t a = 0; a < K; ++a) os << ' ' << residues->at(a, n).get_str();
    os << '\n';
  }
  os << "end\n";
}

LoadedTable read_table(std::istream& is) {
  LoadedTable t;
  const std::string magic = next_line(is, "header");
  if (magic != "polypart-table " + std::to_string(kTableFormatVersion)) {
    throw ValidationError("unsupported table header '" + magic + "'");
  }
  t.poly_text = expect_key(next_line(is, "poly"), "poly");
  const std::string n_text = expect_key(next_line(is, "N"), "N");
  const std::string k_text = expect_key(next_line(is, "K"), "K");
  try {
    t.N = std::stoll(n_text);
    t.K = std::stoll(k_text);
  } catch (const std::logic_error&) {
    throw ValidationError("malformed N/K line");
  }
  if (t.N < 0 || t.K < 0) throw ValidationError("negative N or K");
  next_line(is, "columns");

  for (std::int64_t n = 0; n <= t.N; ++n) {
    std::istringstream row(next_line(is, "rows"));
    std::int64_t idx = -1;
    std::string cell;
    if (!(row >> idx) || idx != n) throw ValidationError("row index mismatch at n=" + std::to_string(n));
    auto read_cell = [&]() {
      if (!(row >> cell)) throw ValidationError("short row at n=" + std::to_string(n));
      mpz_class v;
      if (v.set_str(cell, 10) != 0) throw ValidationError("bad integer '" + cell + "'");
      return v;
    };
    t.totals.push_back(read_cell());
    if (t.K > 0) {
      std::vector<mpz_class> rs;
      for (std::int64_t a = 0; a < t.K; ++a) rs.push_back(read_cell());
      t.residues.push_back(std::move(rs));
    }
  }
  if (next_line(is, "end") != "end") throw ValidationError("missing end marker");
  return t;
}

void write_table_csv(std::ostream& os, const PartitionTable& table, const ResidueTable* residues) {
  check_shapes(table, residues);
  const std::int64_t K = residues ? residues->K : 0;
  os << "n,p_f";
  for (std::int64_t a = 0; a < K; ++a) os << ",a=" << a;
  os << '\n';
  for (std::int64_t n = 0; n <= table.N; ++n) {
    os << n << ',' << table[n].get_str();
    for (std::int64_t a = 0; a < K; ++a) os << ',' << residues->at(a, n).get_str();
    os << '\n';
  }
}

}  // namespace polypart
