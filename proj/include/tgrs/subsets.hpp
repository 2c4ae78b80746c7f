#pragma once
// Lexicographic k-combination enumeration over index sets, plus capped
// counting helpers used by the search guards.

#include <cstdint>
#include <vector>

namespace tgrs {

/// First k-combination of {0..n-1} in lex order. Returns false if k > n.
inline bool first_combination(std::vector<size_t>& c, size_t n, size_t k) {
  if (k > n) return false;
  c.resize(k);
  for (size_t i = 0; i < k; ++i) c[i] = i;
  return true;
}

/// Advance to the next combination in lex order; false when exhausted.
inline bool next_combination(std::vector<size_t>& c, size_t n) {
  const size_t k = c.size();
  if (k == 0) return false;
  size_t i = k;
  while (i-- > 0) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Binomial coefficient, saturating at cap.
inline uint64_t binomial_capped(uint64_t n, uint64_t k, uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    if (r > cap) return cap + 1;
    r = r * (n - k + i) / i;
  }
  return r > cap ? cap + 1 : r;
}

/// b^e, saturating at cap.
inline uint64_t pow_capped(uint64_t b, uint64_t e, uint64_t cap) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < e; ++i) {
    if (r > cap / (b ? b : 1)) return cap + 1;
    r *= b;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace tgrs
