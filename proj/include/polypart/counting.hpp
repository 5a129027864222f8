#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "polypart/ivpoly.hpp"

namespace polypart {

/// Exact p_f(0..N).
struct PartitionTable {
  IntegerValuedPoly poly;
  std::int64_t N;
  std::vector<mpz_class> values;

  const mpz_class& operator[](std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

/// Exact p_f(m, n) for 0 <= m <= M, 0 <= n <= N (m = number of parts).
struct PartsMatrix {
  IntegerValuedPoly poly;
  std::int64_t N;
  std::int64_t M;
  std::vector<mpz_class> entries;  // row-major in m

  const mpz_class& at(std::int64_t m, std::int64_t n) const {
    return entries[static_cast<std::size_t>(m * (N + 1) + n)];
  }
};

/// Exact p_f(a, K; n): partitions of n whose number of parts is = a (mod K).
struct ResidueTable {
  IntegerValuedPoly poly;
  std::int64_t K;
  std::int64_t N;
  std::vector<mpz_class> entries;  // index n * K + a

  /// `a` is reduced modulo K (any sign).
  const mpz_class& at(std::int64_t a, std::int64_t n) const {
    std::int64_t r = a % K;
    if (r < 0) r += K;
    return entries[static_cast<std::size_t>(n * K + r)];
  }
};

/// Coefficients of prod_{parts} 1/(1 - q^v) up to q^N.
std::vector<mpz_class> partition_counts(std::span<const Part> parts, std::int64_t N);

PartitionTable build_table(const IntegerValuedPoly& f, std::int64_t N);

PartsMatrix build_parts_matrix(const IntegerValuedPoly& f, std::int64_t N, std::int64_t M);

/// Tracks the part count modulo K directly; memory O(K N).
ResidueTable build_residue_table(const IntegerValuedPoly& f, std::int64_t K, std::int64_t N);

struct BruteForceCount {
  mpz_class total;
  std::map<std::int64_t, mpz_class> by_parts;  // m -> p_f(m, n), nonzero entries only
};

/// Exhaustive enumeration of multisets of indexed parts summing to n.
/// Exponential in n; meant as an oracle for n up to ~80.
BruteForceCount brute_force(const IntegerValuedPoly& f, std::int64_t n);

}  // namespace polypart
