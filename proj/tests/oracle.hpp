#pragma once

// Independent reference computations for the tests. Everything here works on
// plain std::vector and direct loops so it shares no code with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using CVec = std::vector<C>;

/// r[k + n - 1] = sum_i c(f_i) g_{i+k}, brute force over every lag.
inline CVec correlate(const CVec& f, const CVec& g, bool conjugate) {
  const long n = static_cast<long>(f.size());
  const long m = static_cast<long>(g.size());
  CVec r;
  for (long k = -(n - 1); k <= m - 1; ++k) {
    C acc = 0.0;
    for (long i = 0; i < n; ++i) {
      const long j = i + k;
      if (j < 0 || j >= m) continue;
      acc += (conjugate ? std::conj(f[i]) : f[i]) * g[j];
    }
    r.push_back(acc);
  }
  return r;
}

inline std::vector<std::int64_t> correlate_int(const std::vector<std::int64_t>& f) {
  const long n = static_cast<long>(f.size());
  std::vector<std::int64_t> r;
  for (long k = -(n - 1); k <= n - 1; ++k) {
    std::int64_t acc = 0;
    for (long i = 0; i < n; ++i) {
      if (i + k >= 0 && i + k < n) acc += f[i] * f[i + k];
    }
    r.push_back(acc);
  }
  return r;
}

inline CVec periodic(const CVec& f) {
  const std::size_t n = f.size();
  CVec r(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) r[k] += std::conj(f[i]) * f[(i + k) % n];
  }
  return r;
}

/// Largest |r_k| over lags other than 0 and +-(N-1), relative to |r_0|.
inline double interior_ratio(const CVec& f, bool conjugate) {
  const CVec r = correlate(f, f, conjugate);
  const std::size_t n = f.size();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    if (i == n - 1) continue;
    worst = std::max(worst, std::abs(r[i]));
  }
  return worst / std::abs(r[n - 1]);
}

inline double periodic_ratio(const CVec& f) {
  const CVec r = periodic(f);
  double worst = 0.0;
  for (std::size_t k = 1; k < r.size(); ++k) worst = std::max(worst, std::abs(r[k]));
  return worst / std::abs(r[0]);
}

/// Golay merit factor by direct summation.
inline double merit(const CVec& f) {
  const CVec r = correlate(f, f, true);
  const std::size_t n = f.size();
  double side = 0.0;
  for (std::size_t i = n; i < r.size(); ++i) side += std::norm(r[i]);
  const double e = r[n - 1].real();
  return e * e / (2.0 * side);
}

/// 2D full correlation on row-major rows x cols arrays.
inline CVec correlate2d(const CVec& a, long ar, long ac, const CVec& b, long br, long bc, bool conjugate) {
  const long rr = ar + br - 1;
  const long rc = ac + bc - 1;
  CVec out(static_cast<std::size_t>(rr * rc));
  for (long dy = -(ar - 1); dy <= br - 1; ++dy) {
    for (long dx = -(ac - 1); dx <= bc - 1; ++dx) {
      C acc = 0.0;
      for (long y = 0; y < ar; ++y) {
        for (long x = 0; x < ac; ++x) {
          const long y2 = y + dy;
          const long x2 = x + dx;
          if (y2 < 0 || y2 >= br || x2 < 0 || x2 >= bc) continue;
          const C av = a[y * ac + x];
          acc += (conjugate ? std::conj(av) : av) * b[y2 * bc + x2];
        }
      }
      out[(dy + ar - 1) * rc + (dx + ac - 1)] = acc;
    }
  }
  return out;
}

/// 2D full convolution.
inline CVec convolve2d(const CVec& a, long ar, long ac, const CVec& b, long br, long bc) {
  const long rc = ac + bc - 1;
  CVec out(static_cast<std::size_t>((ar + br - 1) * rc));
  for (long y = 0; y < ar; ++y)
    for (long x = 0; x < ac; ++x)
      for (long v = 0; v < br; ++v)
        for (long u = 0; u < bc; ++u) out[(y + v) * rc + (x + u)] += a[y * ac + x] * b[v * bc + u];
  return out;
}

inline bool near(C a, C b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace oracle
