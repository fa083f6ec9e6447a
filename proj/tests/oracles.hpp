#pragma once

// Independent ground truth for the tests: integer dynamic programming and
// exact rational recurrences. Nothing here touches the library internals.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "meinardus/models.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// p(0..N) by the coin-change recurrence.
inline std::vector<cpp_int> partitions(std::size_t N) {
  std::vector<cpp_int> p(N + 1, 0);
  p[0] = 1;
  for (std::size_t k = 1; k <= N; ++k)
    for (std::size_t n = k; n <= N; ++n) p[n] += p[n - k];
  return p;
}

// q(0..N), partitions into distinct parts.
inline std::vector<cpp_int> distinct_partitions(std::size_t N) {
  std::vector<cpp_int> q(N + 1, 0);
  q[0] = 1;
  for (std::size_t k = 1; k <= N; ++k)
    for (std::size_t n = N; n >= k; --n) q[n] += q[n - k];
  return q;
}

// Coefficients of prod_k S(z^k)^{b_k} for integer b_k >= 0, a = 1 and an
// integer-coefficient inner series, by repeated truncated multiplication.
inline std::vector<cpp_int> integer_model(const meinardus::WeightedModel& m, std::size_t N) {
  std::vector<cpp_int> c(N + 1, 0);
  c[0] = 1;
  std::vector<long> d(N + 1);
  for (std::size_t j = 0; j <= N; ++j) d[j] = static_cast<long>(m.inner.d(j));
  for (std::size_t k = 1; k <= N; ++k) {
    const long b = static_cast<long>(m.weights.at(k));
    for (long rep = 0; rep < b; ++rep) {
      for (std::size_t n = N + 1; n-- > 0;) {
        cpp_int acc = c[n];
        for (std::size_t j = 1; j * k <= n; ++j)
          if (d[j]) acc += d[j] * c[n - j * k];
        c[n] = acc;
      }
    }
  }
  return c;
}

// n c_n = sum k L_k c_{n-k} in exact rationals; L[0] unused.
inline std::vector<cpp_rational> exp_rational(const std::vector<cpp_rational>& L, std::size_t N) {
  std::vector<cpp_rational> c(N + 1, 0);
  c[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    cpp_rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += cpp_rational(static_cast<long>(k)) * L[k] * c[n - k];
    c[n] = acc / static_cast<long>(n);
  }
  return c;
}

// sigma(k)/k for k = 0..N.
inline std::vector<cpp_rational> partition_lambda(std::size_t N) {
  std::vector<cpp_rational> L(N + 1, 0);
  for (std::size_t k = 1; k <= N; ++k) {
    long s = 0;
    for (std::size_t d = 1; d <= k; ++d)
      if (k % d == 0) s += static_cast<long>(d);
    L[k] = cpp_rational(s, static_cast<long>(k));
  }
  return L;
}

inline std::string str(const cpp_int& v) { return v.str(); }

}  // namespace oracle
