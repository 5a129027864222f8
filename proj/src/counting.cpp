#include "polypart/counting.hpp"

#include "polypart/errors.hpp"

namespace polypart {

namespace {

void require_size(std::int64_t N, const char* what) {
  if (N < 0) throw ValidationError(std::string(what) + " must be non-negative");
}

}  // namespace

std::vector<mpz_class> partition_counts(std::span<const Part> parts, std::int64_t N) {
  require_size(N, "N");
  std::vector<mpz_class> p(static_cast<std::size_t>(N + 1), mpz_class(0));
  p[0] = 1;
  for (const Part& part : parts) {
    const auto v = static_cast<std::size_t>(part.value);
    for (std::size_t n = v; n < p.size(); ++n) p[n] += p[n - v];
  }
  return p;
}

PartitionTable build_table(const IntegerValuedPoly& f, std::int64_t N) {
  require_admissible(f);
  auto parts = parts_up_to(f, N);
  return PartitionTable{f, N, partition_counts(parts, N)};
}

PartsMatrix build_parts_matrix(const IntegerValuedPoly& f, std::int64_t N, std::int64_t M) {
  require_admissible(f);
  require_size(N, "N");
  require_size(M, "M");
  PartsMatrix out{f, N, M, std::vector<mpz_class>(static_cast<std::size_t>((M + 1) * (N + 1)), mpz_class(0))};
  const auto width = static_cast<std::size_t>(N + 1);
  out.entries[0] = 1;
  for (const Part& part : parts_up_to(f, N)) {
    const auto v = static_cast<std::size_t>(part.value);
    // Ascending n and m: the source cell already includes copies of this part.
    for (std::size_t n = v; n < width; ++n) {
      for (std::size_t m = 1; m <= static_cast<std::size_t>(M); ++m) {
        out.entries[m * width + n] += out.entries[(m - 1) * width + n - v];
      }
    }
  }
  return out;
}

ResidueTable build_residue_table(const IntegerValuedPoly& f, std::int64_t K, std::int64_t N) {
  require_admissible(f);
  require_size(N, "N");
  if (K < 1) throw ValidationError("modulus K must be positive");
  const auto k = static_cast<std::size_t>(K);
  ResidueTable out{f, K, N, std::vector<mpz_class>(k * static_cast<std::size_t>(N + 1), mpz_class(0))};
  out.entries[0] = 1;
  auto& e = out.entries;
  for (const Part& part : parts_up_to(f, N)) {
    const auto v = static_cast<std::size_t>(part.value);
    for (std::size_t n = v; n <= static_cast<std::size_t>(N); ++n) {
      const std::size_t dst = n * k;
      const std::size_t src = (n - v) * k;
      // One more part shifts the residue by one.
      e[dst] += e[src + k - 1];
      for (std::size_t a = 1; a < k; ++a) e[dst + a] += e[src + a - 1];
    }
  }
  return out;
}

namespace {

struct Enumerator {
  const std::vector<Part>& parts;
  std::vector<std::uint64_t> hist;

  // Choose a multiplicity for parts[i], then recurse on the rest.
  void run(std::size_t i, std::int64_t remaining, std::int64_t count) {
    if (remaining == 0) {
      ++hist[static_cast<std::size_t>(count)];
      return;
    }
    if (i == parts.size()) return;
    const std::int64_t v = parts[i].value;
    for (std::int64_t used = 0; used * v <= remaining; ++used) {
      run(i + 1, remaining - used * v, count + used);
    }
  }
};

}  // namespace

BruteForceCount brute_force(const IntegerValuedPoly& f, std::int64_t n) {
  require_admissible(f);
  require_size(n, "n");
  auto parts = parts_up_to(f, n);
  Enumerator e{parts, std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0)};
  e.run(0, n, 0);
  BruteForceCount out;
  out.total = 0;
  for (std::size_t m = 0; m < e.hist.size(); ++m) {
    if (e.hist[m] == 0) continue;
    mpz_class c(static_cast<unsigned long>(e.hist[m]));
    out.by_parts[static_cast<std::int64_t>(m)] = c;
    out.total += c;
  }
  return out;
}

}  // namespace polypart
