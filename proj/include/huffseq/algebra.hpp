#pragma once

#include <numbers>

#include "huffseq/sequence.hpp"

namespace huffseq {

/// Kronecker product: block i of the result is f_i * g.
Sequence kron(const Sequence& f, const Sequence& g);

/// Outer product. The result shape is [|f|, g.shape...].
Grid outer(const Sequence& f, const Sequence& g);
Grid outer(const Sequence& f, const Grid& g);

/// Elementwise f + c and f * c.
Sequence offset(const Sequence& f, Scalar c);
Sequence scale(const Sequence& f, Scalar c);

/// Round every element to the nearest integer, ties away from zero.
/// Throws ArgumentError if any element has a non-negligible imaginary part.
Sequence quantize_round(const Sequence& f);
VectorXi64 to_integer(const Sequence& f, Real tol = kDefaultTol);

Sequence reversed(const Sequence& f);

/// Forward DFT of x zero-padded to `padded_length`:
///   X_k = sum_n x_n exp(-2 pi i k n / L), no normalisation.
template <typename Derived>
VectorXc dft(const Eigen::MatrixBase<Derived>& x, Index padded_length) {
  const Index n = x.size();
  if (padded_length < n) {
    throw ArgumentError("dft padded length " + std::to_string(padded_length) + " is shorter than input length " +
                        std::to_string(n));
  }
  VectorXc out(padded_length);
  const Real w = -2.0 * std::numbers::pi / static_cast<Real>(padded_length);
  for (Index k = 0; k < padded_length; ++k) {
    Scalar acc{0.0, 0.0};
    for (Index j = 0; j < n; ++j) {
      // reduce k*j mod L before the trig call to keep phases accurate
      const Index phase = (k * j) % padded_length;
      acc += Scalar(x[j]) * std::polar(1.0, w * static_cast<Real>(phase));
    }
    out[k] = acc;
  }
  return out;
}

Sequence dft(const Sequence& f, Index padded_length);

}  // namespace huffseq
