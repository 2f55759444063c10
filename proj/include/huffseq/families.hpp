#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "huffseq/fibonacci.hpp"
#include "huffseq/sequence.hpp"

namespace huffseq {

// ---------------------------------------------------------------------------
// Fibonacci-polynomial families, templated on the scalar so that an integer
// scale runs through exact int64 arithmetic. All three are written in the
// "multiplied-out" form 2s * [...] so no division is needed:
//   2s * (2s)^{-1}                 = 1
//   2s * (F_{M+1}/2 - F_M / s)     = s F_{M+1} - 2 F_M
// ---------------------------------------------------------------------------

namespace detail {

inline void require_length(int n, int modulus, int residue, int min_n, std::string_view what) {
  if (n < min_n || ((n % modulus) + modulus) % modulus != residue) {
    throw ArgumentError(std::string(what) + ": length " + std::to_string(n) + " must satisfy N >= " +
                        std::to_string(min_n) + " and N = " + std::to_string(residue) + " (mod " +
                        std::to_string(modulus) + ")");
  }
}

template <typename T>
void require_nonzero(const T& s, std::string_view what) {
  if (s == T(0)) throw ArgumentError(std::string(what) + ": scale s must be non-zero");
}

template <typename T>
T fib_middle(int m, const T& s) {
  return s * fib_poly(m + 1, s) - T(2) * fib_poly(m, s);
}

}  // namespace detail

/// Canonical Fibonacci sequence of length N = 4n-1:
///   2s[(2s)^-1, F_1..F_M, F_{M+1}/2 - F_M/s, F_{-M}..F_{-1}, -(2s)^-1],  M = (N-3)/2.
template <typename T>
VectorX<T> fibonacci_canonical(int n, const T& s) {
  detail::require_length(n, 4, 3, 7, "fib");
  detail::require_nonzero(s, "fib");
  const int m = (n - 3) / 2;
  VectorX<T> h(n);
  Index i = 0;
  h[i++] = T(1);
  for (int k = 1; k <= m; ++k) h[i++] = T(2) * s * fib_poly(k, s);
  h[i++] = detail::fib_middle(m, s);
  for (int k = m; k >= 1; --k) h[i++] = T(2) * s * fib_poly(-k, s);
  h[i++] = T(-1);
  return h;
}

/// Sign-flipped Fibonacci sequence of length N = 4n+1 whose autocorrelation
/// has exactly five non-zero entries {1, -2 sqrt(P-2), P, -2 sqrt(P-2), 1}.
template <typename T>
VectorX<T> fibonacci_plus(int n, const T& s) {
  detail::require_length(n, 4, 1, 5, "hplus");
  detail::require_nonzero(s, "hplus");
  const int m = (n - 3) / 2;
  VectorX<T> h(n);
  Index i = 0;
  h[i++] = T(1);
  for (int k = 1; k <= m; ++k) h[i++] = T(2) * s * fib_poly(k, s);
  h[i++] = detail::fib_middle(m, s);
  for (int k = m; k >= 1; --k) h[i++] = T(-2) * s * fib_poly(-k, s);
  h[i++] = T(1);
  return h;
}

/// Perfect (zero periodic off-peak) array of length N-1 built from the
/// canonical Fibonacci sequence of length N: 2s[X, F_{-M}, ..., F_M].
template <typename T>
VectorX<T> fibonacci_perfect(int n, const T& s) {
  detail::require_length(n, 4, 3, 7, "perfect-fib");
  detail::require_nonzero(s, "perfect-fib");
  const int m = (n - 3) / 2;
  VectorX<T> h(n - 1);
  Index i = 0;
  h[i++] = detail::fib_middle(m, s);
  for (int k = -m; k <= m; ++k) h[i++] = T(2) * s * fib_poly(k, s);
  return h;
}

// ---------------------------------------------------------------------------
// Sequence-level generators (complex double path).
// ---------------------------------------------------------------------------

Sequence gen_fibonacci(int n, Scalar s);
Sequence gen_h_plus(int n, Scalar s);
Sequence gen_perfect_fib(int n, Scalar s);

/// Exact integer variants; throw RangeError on int64 overflow.
VectorXi64 gen_fibonacci_exact(int n, std::int64_t s);
VectorXi64 gen_h_plus_exact(int n, std::int64_t s);
VectorXi64 gen_perfect_fib_exact(int n, std::int64_t s);

Sequence gen_h9a(Scalar s);
Sequence gen_h9b(Scalar s);
Sequence gen_h13a(Scalar s);
Sequence gen_h13b(Scalar s);

/// Length-17 canonical sequence with a T(s) radical. Throws DomainError if the
/// radicand of T(s) is real and negative.
Sequence gen_h17(Scalar s);
/// Radicand of T(s) (before the 1/8 and square root). Exposed for domain reports.
Scalar h17_radicand(Scalar s);
/// Length-17 sequence with matched +1 start and end values; P ~ 22.3.
Sequence gen_h17_matched();

Sequence gen_h11(Scalar s);
Sequence gen_he4(Scalar s);
/// Throws DomainError when X(s) is real-negative or Z(s) vanishes.
Sequence gen_he6(Scalar s);

/// Arbitrary-length canonical family, N >= 3, s not in {0, 1}. Principal sqrt.
Sequence gen_h_arb(int n, Scalar s);
/// Tangent-spectrum family, odd N >= 5, s not in {0, 1, -1}.
Sequence gen_h_tan(int n, Scalar s);
/// Perfect array of length N-1 derived from gen_h_arb(N, s), N >= 4.
Sequence gen_perfect_arb(int n, Scalar s);

// ---------------------------------------------------------------------------
// Generic dispatch and fixtures.
// ---------------------------------------------------------------------------

struct FamilySpec {
  Family family = Family::kFibonacci;
  int n = 0;            // ignored for fixed-length families
  Scalar s{1.0, 0.0};   // ignored for constants and fixtures
  std::string fixture;  // only for Family::kFixture
};

/// True when the family takes an explicit length.
bool family_takes_length(Family f);
/// Fixed length for families that do not take one, 0 otherwise.
int family_fixed_length(Family f);

Sequence generate(const FamilySpec& spec);

/// Reference sequences that have no generating formula here.
Sequence fixture(std::string_view name);
std::vector<std::string> fixture_names();
std::string_view fixture_description(std::string_view name);

}  // namespace huffseq
