#pragma once

#include <utility>

#include "huffseq/sequence.hpp"

namespace huffseq {

// ---------------------------------------------------------------------------
// Raw correlation kernels, templated on the Eigen scalar so integer vectors
// take an exact path.
// ---------------------------------------------------------------------------

/// Aperiodic cross-correlation r_k = sum_i c(f_i) g_{i+k} for
/// k = -(|f|-1) .. |g|-1, stored at index k + |f| - 1. c is conjugation when
/// `conjugate` is set, identity otherwise.
template <typename DF, typename DG>
VectorX<typename DF::Scalar> xcorr_values(const Eigen::MatrixBase<DF>& f, const Eigen::MatrixBase<DG>& g,
                                          bool conjugate) {
  using T = typename DF::Scalar;
  const Index n = f.size();
  const Index m = g.size();
  VectorX<T> r = VectorX<T>::Zero(n + m - 1);
  for (Index i = 0; i < n; ++i) {
    const T fi = conjugate ? conj_if_complex(T(f[i])) : T(f[i]);
    for (Index j = 0; j < m; ++j) r[j - i + n - 1] += fi * T(g[j]);
  }
  return r;
}

template <typename D>
VectorX<typename D::Scalar> autocorr_values(const Eigen::MatrixBase<D>& f) {
  return xcorr_values(f, f, true);
}

/// Conjugate-free ("dual") autocorrelation sum_i f_i f_{i+k}.
template <typename D>
VectorX<typename D::Scalar> dual_autocorr_values(const Eigen::MatrixBase<D>& f) {
  return xcorr_values(f, f, false);
}

/// Cyclic autocorrelation r_k = sum_i conj(f_i) f_{(i+k) mod N}, k = 0..N-1.
template <typename D>
VectorX<typename D::Scalar> periodic_autocorr_values(const Eigen::MatrixBase<D>& f, bool conjugate = true) {
  using T = typename D::Scalar;
  const Index n = f.size();
  VectorX<T> r = VectorX<T>::Zero(n);
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      const T fi = conjugate ? conj_if_complex(T(f[i])) : T(f[i]);
      r[k] += fi * T(f[(i + k) % n]);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

enum class CorrelationKind { kAperiodic, kPeriodic, kDualAperiodic, kCross, kDualCross };

struct CorrelationProfile {
  VectorXc values;
  CorrelationKind kind = CorrelationKind::kAperiodic;
  Index zero_lag = 0;                 // index of lag 0 inside `values`
  Real peak = 0.0;                    // |value at lag 0|
  std::pair<Scalar, Scalar> end_values;  // most negative and most positive lag
  Real max_interior_offpeak = 0.0;    // excludes lag 0 and, for aperiodic kinds, both extremes
  Index worst_lag = 0;                // lag attaining max_interior_offpeak (0 if none)

  Index min_lag() const { return -zero_lag; }
  Index max_lag() const { return values.size() - 1 - zero_lag; }
  const Scalar& at_lag(Index k) const { return values[k + zero_lag]; }
};

std::string_view kind_name(CorrelationKind k);

CorrelationProfile xcorr(const Sequence& f, const Sequence& g, bool conjugate);
CorrelationProfile autocorr(const Sequence& f);
CorrelationProfile dual_autocorr(const Sequence& f);
/// Requires |f| >= 2.
CorrelationProfile periodic_autocorr(const Sequence& f);

// ---------------------------------------------------------------------------
// nD kernels on Grid (ranks must match).
// ---------------------------------------------------------------------------

/// Full aperiodic correlation; output extent a_i + b_i - 1, lag 0 at a_i - 1.
Grid nd_xcorr(const Grid& a, const Grid& b, bool conjugate);
Grid nd_autocorr(const Grid& g);
Grid nd_dual_autocorr(const Grid& g);
/// Full linear convolution; output extent a_i + b_i - 1.
Grid nd_convolve(const Grid& a, const Grid& b);

}  // namespace huffseq
