#pragma once

#include <vector>

namespace tudim::detail {

// Visits k-subsets of {0..n-1} in lexicographic order. The callback returns
// false to stop early; the function returns false iff stopped.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if (!f(static_cast<const std::vector<int>&>(c))) return false;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace tudim::detail
