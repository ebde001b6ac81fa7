#pragma once

// q prod_{n>=1} (1 - q^n)^2 (1 - q^{11n})^2, the level 11 weight 2 newform.

#include <cstdint>
#include <vector>

namespace oracle {

inline std::vector<std::int64_t> eta_11(std::size_t n_max) {
  std::vector<std::int64_t> s(n_max + 1, 0);
  s[0] = 1;
  auto times = [&](std::size_t step) {  // multiply by (1 - q^step)
    for (std::size_t k = n_max; k >= step; --k) s[k] -= s[k - step];
  };
  for (std::size_t n = 1; n <= n_max; ++n) {
    times(n);
    times(n);
    if (11 * n <= n_max) {
      times(11 * n);
      times(11 * n);
    }
  }
  std::vector<std::int64_t> a(n_max + 1, 0);  // a[n] = coefficient of q^n
  for (std::size_t n = 1; n <= n_max; ++n) a[n] = s[n - 1];
  return a;
}

}  // namespace oracle
