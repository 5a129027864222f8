#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polypart/counting.hpp"

namespace polypart {

/// Text table format, version 1:
///
///     polypart-table 1
///     poly binom:... | rat:...
///     N <N>
///     K <K>                 (0 when no residue columns)
///     columns n p_f [a0 a1 ...]
///     <n> <p_f(n)> [<p_f(0,K;n)> ...]
///     end
inline constexpr int kTableFormatVersion = 1;

struct LoadedTable {
  std::string poly_text;
  std::int64_t N = 0;
  std::int64_t K = 0;
  std::vector<mpz_class> totals;
  std::vector<std::vector<mpz_class>> residues;  // residues[n][a]; empty when K == 0
};

void write_table(std::ostream& os, const PartitionTable& table, const ResidueTable* residues = nullptr);

/// Throws ValidationError on malformed input or version mismatch.
LoadedTable read_table(std::istream& is);

/// Spreadsheet export: header `n,p_f` plus `a=0,...` columns when residues are given.
void write_table_csv(std::ostream& os, const PartitionTable& table, const ResidueTable* residues = nullptr);

}  // namespace polypart
