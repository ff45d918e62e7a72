#pragma once

#include <vector>

namespace gtm::detail {

// Advances 0 <= idx[0] < ... < idx[k-1] < n to the lexicographically next
// k-combination; false once the last one has been seen.
inline bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace gtm::detail
