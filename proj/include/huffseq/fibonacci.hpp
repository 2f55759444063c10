#pragma once

#include <cstdlib>
#include <string>
#include <type_traits>

#include "huffseq/types.hpp"

namespace huffseq {

inline constexpr int kFibIndexLimit = 64;

namespace detail {

template <typename T>
T checked_mul_add(const T& a, const T& b, const T& c) {
  if constexpr (std::is_integral_v<T>) {
    T prod{};
    T sum{};
    if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(prod, c, &sum)) {
      throw RangeError("Fibonacci polynomial overflows the exact integer path");
    }
    return sum;
  } else {
    return a * b + c;
  }
}

}  // namespace detail

/// Fibonacci polynomial F_n(s): F_0 = 0, F_1 = 1, F_{n+1} = s F_n + F_{n-1},
/// extended to negative indices by F_{-n} = (-1)^{n+1} F_n.
///
/// T may be an integer type (exact, overflow-checked), double or std::complex<double>.
template <typename T>
T fib_poly(int n, const T& s) {
  if (std::abs(n) > kFibIndexLimit) {
    throw RangeError("Fibonacci index " + std::to_string(n) + " exceeds |n| <= " + std::to_string(kFibIndexLimit));
  }
  if (n < 0) {
    const T f = fib_poly(-n, s);
    return (-n) % 2 == 1 ? f : T(-f);
  }
  T prev = T(0);
  T cur = T(1);
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    T next = detail::checked_mul_add(s, cur, prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace huffseq
