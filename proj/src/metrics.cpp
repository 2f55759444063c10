#include "huffseq/metrics.hpp"

#include <numeric>

#include "huffseq/algebra.hpp"

namespace huffseq {

namespace {

void require_nondegenerate(const Sequence& f, std::string_view what) {
  if (f.length() < 2) throw ArgumentError(std::string(what) + ": sequence of length 1 is degenerate");
  if (f.values.squaredNorm() == 0.0) throw ArgumentError(std::string(what) + ": all-zero sequence");
}

CanonicalReport report_from(const CorrelationProfile& p, Real tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  CanonicalReport r;
  r.tolerance = tol;
  r.peak = p.peak;
  r.worst_lag = p.worst_lag;
  r.worst_residual = p.max_interior_offpeak;
  r.is_canonical = p.max_interior_offpeak <= tol * p.peak;
  return r;
}

}  // namespace

CanonicalReport is_canonical(const Sequence& f, Real tol) {
  require_nondegenerate(f, "is_canonical");
  return report_from(autocorr(f), tol);
}

CanonicalReport is_dual_canonical(const Sequence& f, Real tol) {
  require_nondegenerate(f, "is_dual_canonical");
  return report_from(dual_autocorr(f), tol);
}

bool is_perfect(const Sequence& f, Real tol) {
  require_nondegenerate(f, "is_perfect");
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const CorrelationProfile p = periodic_autocorr(f);
  return p.max_interior_offpeak <= tol * p.peak;
}

Real merit_factor(const Sequence& f) {
  require_nondegenerate(f, "merit_factor");
  const VectorXc r = autocorr_values(f.values);
  const Index n = f.length();
  const Real e = r[n - 1].real();
  const Real side = r.tail(n - 1).squaredNorm();
  if (side == 0.0) return std::numeric_limits<Real>::infinity();
  return e * e / (2.0 * side);
}

Ratio merit_factor_exact(const VectorXi64& f) {
  if (f.size() < 2) throw ArgumentError("merit_factor: sequence of length 1 is degenerate");
  if ((f.array() == 0).all()) throw ArgumentError("merit_factor: all-zero sequence");
  const VectorXi64 r = autocorr_values(f);
  const Index n = f.size();
  const std::int64_t e = r[n - 1];
  std::int64_t side = 0;
  for (Index k = n; k < r.size(); ++k) side += r[k] * r[k];
  if (side == 0) return {1, 0};
  std::int64_t num = e * e;
  std::int64_t den = 2 * side;
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Real spectral_flatness(const Sequence& f) {
  const VectorXr mag = dft(f.values, 2 * f.length() - 1).cwiseAbs();
  const Real hi = mag.maxCoeff();
  if (hi == 0.0) throw ArgumentError("spectral_flatness: all-zero sequence");
  return mag.minCoeff() / hi;
}

VectorXc dual_cross_spectrum(const Sequence& f) {
  const Index len = 2 * f.length() - 1;
  const VectorXc fwd = dft(f.values, len);
  const VectorXc bar = dft(f.values.conjugate().eval(), len);
  return bar.conjugate().cwiseProduct(fwd);
}

Real energy(const Sequence& f) { return f.values.squaredNorm(); }

}  // namespace huffseq
