#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace huffseq {

using Real = double;
using Scalar = std::complex<double>;
using Index = Eigen::Index;

template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using VectorXc = Eigen::VectorXcd;
using VectorXr = Eigen::VectorXd;
using VectorXi64 = VectorX<std::int64_t>;

/// Relative tolerance used for equality in the floating-point path.
inline constexpr Real kDefaultTol = 1e-9;

// Error taxonomy. The CLI maps ArgumentError and RangeError to exit 2,
// DomainError to exit 3.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Symmetric tolerance-aware comparison: |a-b| <= tol * max(1, |a|, |b|).
inline bool approx_equal(const Scalar& a, const Scalar& b, Real tol = kDefaultTol) {
  const Real scale = std::max({Real{1}, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

inline bool is_finite(const Scalar& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline bool is_real(const Scalar& z, Real tol = kDefaultTol) {
  return std::abs(z.imag()) <= tol * std::max(Real{1}, std::abs(z.real()));
}

/// Conjugate for complex scalars, identity for real and integer scalars.
template <typename T>
T conj_if_complex(const T& x) {
  if constexpr (Eigen::NumTraits<T>::IsComplex) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <typename T>
Real magnitude(const T& x) {
  return static_cast<Real>(std::abs(x));
}

}  // namespace huffseq
