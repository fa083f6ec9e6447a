#include "meinardus/detail/kernels.hpp"

namespace meinardus::detail {

std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    spf[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t m = i * i; m <= n; m += i)
      if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(i);
  }
  return spf;
}

}  // namespace meinardus::detail
