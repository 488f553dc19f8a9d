#pragma once

#include <cstdint>

namespace algeo {

// Resource limits shared across the modules. Exceeding a cap raises
// SizeLimitExceeded naming the field; the CLI exposes overrides.
struct Caps {
  std::int64_t max_terms = 100'000;     // term enumeration output size
  std::int64_t max_points = 1'000'000;  // |H|^n point grids (also rep points)
  std::int64_t max_product = 1'000'000; // direct-product carrier, |H|^|A| in closures
  std::int64_t max_table = 20'000'000;  // total materialized table entries
  std::int64_t max_maps = 1'000'000;    // hom enumeration brute-force cutover
  std::int64_t max_pairs = 2'000'000;   // identity pair listings
  std::int64_t max_subsets = 65'536;    // exhaustive lattice mode (2^16 subsets)
  std::int64_t max_scanned_systems = 200'000;  // equivalence search safety cap
};

// pow with a ceiling: returns min(base^exp, limit+1) without overflowing.
inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp, std::int64_t limit) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace algeo
