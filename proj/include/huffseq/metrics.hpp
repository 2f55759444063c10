#pragma once

#include <cstdint>
#include <limits>

#include "huffseq/correlation.hpp"

namespace huffseq {

struct CanonicalReport {
  bool is_canonical = false;
  Real tolerance = 0.0;
  Index worst_lag = 0;
  Real worst_residual = 0.0;  // absolute magnitude at worst_lag
  Real peak = 0.0;
};

/// Canonical iff every lag other than 0 and +-(N-1) has |r_k| <= tol * P.
CanonicalReport is_canonical(const Sequence& f, Real tol = kDefaultTol);
/// Same test on the conjugate-free autocorrelation.
CanonicalReport is_dual_canonical(const Sequence& f, Real tol = kDefaultTol);
/// Perfect iff every non-zero cyclic shift has |r_k| <= tol * P.
bool is_perfect(const Sequence& f, Real tol = kDefaultTol);

/// Golay merit factor E^2 / (2 sum_{k>0} |r_k|^2). +inf when every off-peak lag is zero.
Real merit_factor(const Sequence& f);

/// Reduced fraction for the exact integer path.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  Real value() const { return static_cast<Real>(num) / static_cast<Real>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Exact merit factor for integer sequences; den == 0 encodes +inf.
Ratio merit_factor_exact(const VectorXi64& f);

/// min/max of |DFT| over 2N-1 bins; 1 means perfectly flat.
Real spectral_flatness(const Sequence& f);

/// conj(F[conj f]) * F[f] on 2N-1 bins (the dual cross-spectrum).
VectorXc dual_cross_spectrum(const Sequence& f);

/// Sum of squared magnitudes.
Real energy(const Sequence& f);

}  // namespace huffseq
