#include "huffseq/decorrelate.hpp"

#include <cmath>

namespace huffseq {

namespace {

void require_real(const Grid& h, std::string_view what) {
  if (!h.is_real()) throw ArgumentError(std::string(what) + ": array is complex, use split_complex");
}

Grid positive_part(const Grid& h, Real sign, bool imag) {
  VectorXc d(h.size());
  for (Index i = 0; i < h.size(); ++i) {
    const Real x = sign * (imag ? h.data()[i].imag() : h.data()[i].real());
    d[i] = Scalar(x > 0.0 ? x : 0.0, 0.0);
  }
  return Grid(h.shape(), std::move(d));
}

Real mask_sum(const Grid& g) { return g.data().real().sum(); }

}  // namespace

std::string_view mask_kind_name(MaskKind k) {
  switch (k) {
    case MaskKind::kPedestal:
      return "pedestal";
    case MaskKind::kSplitSign:
      return "split_sign";
    case MaskKind::kSplitComplex:
      return "split_complex";
  }
  return "split_sign";
}

MaskSet split_signs(const Grid& h) {
  require_real(h, "split_signs");
  return {MaskKind::kSplitSign, {positive_part(h, 1.0, false), positive_part(h, -1.0, false)}, 0.0};
}

MaskSet split_complex(const Grid& h) {
  return {MaskKind::kSplitComplex,
          {positive_part(h, 1.0, false), positive_part(h, -1.0, false), positive_part(h, 1.0, true),
           positive_part(h, -1.0, true)},
          0.0};
}

Real pedestal_min(const Grid& h) {
  require_real(h, "pedestal_min");
  return h.data().real().cwiseAbs().maxCoeff();
}

MaskSet pedestal_masks(const Grid& h, Real kappa) {
  require_real(h, "pedestal_masks");
  const Real lo = h.data().real().minCoeff();
  const Real hi = h.data().real().maxCoeff();
  if (kappa < 0.0) throw ArgumentError("pedestal kappa must be >= 0, got " + std::to_string(kappa));
  if (kappa < -lo) {
    throw ArgumentError("pedestal kappa " + std::to_string(kappa) + " < -min(H) = " + std::to_string(-lo) +
                        ": mask H + kappa would be negative");
  }
  if (kappa < hi) {
    throw ArgumentError("pedestal kappa " + std::to_string(kappa) + " < max(H) = " + std::to_string(hi) +
                        ": mask kappa - H would be negative");
  }
  VectorXc plus = h.data().real().array() + kappa;
  VectorXc minus = kappa - h.data().real().array();
  return {MaskKind::kPedestal, {Grid(h.shape(), std::move(plus)), Grid(h.shape(), std::move(minus))}, kappa};
}

Grid recombine(const MaskSet& m) {
  switch (m.kind) {
    case MaskKind::kSplitSign:
      return Grid(m.masks[0].shape(), m.masks[0].data() - m.masks[1].data());
    case MaskKind::kPedestal:
      return Grid(m.masks[0].shape(), 0.5 * (m.masks[0].data() - m.masks[1].data()));
    case MaskKind::kSplitComplex: {
      const Scalar i{0.0, 1.0};
      return Grid(m.masks[0].shape(),
                  m.masks[0].data() - m.masks[1].data() + i * (m.masks[2].data() - m.masks[3].data()));
    }
  }
  throw ArgumentError("unknown mask kind");
}

DoseReport dose(const MaskSet& m) {
  DoseReport r;
  for (const Grid& g : m.masks) {
    r.per_mask.push_back(mask_sum(g));
    r.total_dose += r.per_mask.back();
  }
  return r;
}

Grid blur(const Grid& object, const Grid& h) { return nd_convolve(object, h); }

Grid measure(const Grid& object, const MaskSet& m) {
  std::vector<Grid> exposures;
  exposures.reserve(m.masks.size());
  for (const Grid& mask : m.masks) exposures.push_back(nd_convolve(object, mask));
  switch (m.kind) {
    case MaskKind::kSplitSign:
      return Grid(exposures[0].shape(), exposures[0].data() - exposures[1].data());
    case MaskKind::kPedestal:
      // O*(H+k) - O*(k-H) = 2 O*H; the kappa terms cancel exactly.
      return Grid(exposures[0].shape(), 0.5 * (exposures[0].data() - exposures[1].data()));
    case MaskKind::kSplitComplex: {
      const Scalar i{0.0, 1.0};
      return Grid(exposures[0].shape(), exposures[0].data() - exposures[1].data() +
                                            i * (exposures[2].data() - exposures[3].data()));
    }
  }
  throw ArgumentError("unknown mask kind");
}

CanonicalReport is_canonical(const Grid& h, Real tol, bool dual) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const Grid r = nd_xcorr(h, h, !dual);
  const Index rank = h.rank();
  std::vector<Index> idx(static_cast<std::size_t>(rank));
  std::vector<Index> zero(static_cast<std::size_t>(rank));
  for (Index ax = 0; ax < rank; ++ax) zero[ax] = h.extent(ax) - 1;

  CanonicalReport rep;
  rep.tolerance = tol;
  rep.peak = std::abs(r(zero));
  for (Index f = 0; f < r.size(); ++f) {
    r.unravel(f, idx);
    bool allowed = true;  // lag is 0 or an extreme on every axis
    bool is_zero = true;
    for (Index ax = 0; ax < rank; ++ax) {
      const Index lag = idx[ax] - zero[ax];
      if (lag != 0) is_zero = false;
      if (lag != 0 && std::abs(lag) != h.extent(ax) - 1) allowed = false;
    }
    if (is_zero || allowed) continue;
    const Real mag = std::abs(r.data()[f]);
    if (mag > rep.worst_residual) {
      rep.worst_residual = mag;
      rep.worst_lag = f;
    }
  }
  rep.is_canonical = rep.worst_residual <= tol * rep.peak;
  return rep;
}

Reconstruction reconstruct(const Grid& measurement, const Grid& h, bool dual) {
  if (measurement.rank() != h.rank()) {
    throw ArgumentError("reconstruct: rank mismatch " + shape_string(measurement.shape()) + " vs " +
                        shape_string(h.shape()));
  }
  std::vector<Index> out_shape(h.shape().size());
  for (Index ax = 0; ax < h.rank(); ++ax) {
    out_shape[ax] = measurement.extent(ax) - h.extent(ax) + 1;
    if (out_shape[ax] < 1) {
      throw ArgumentError("reconstruct: measurement " + shape_string(measurement.shape()) +
                          " is smaller than the probe " + shape_string(h.shape()));
    }
  }

  Reconstruction rec;
  const CanonicalReport check = is_canonical(h, 1e-6, dual);
  rec.canonical = check.is_canonical;
  if (!rec.canonical) {
    rec.warning = std::string("probe is not ") + (dual ? "dual-" : "") + "canonical at tol 1e-6 (residual " +
                  std::to_string(check.worst_residual) + " vs peak " + std::to_string(check.peak) +
                  "); estimate carries off-peak artifacts";
  }

  // Zero-lag value of h (x) h: sum |h|^2, or sum h^2 for the dual form.
  const Scalar r0 = dual ? h.data().cwiseProduct(h.data()).sum() : Scalar(h.data().squaredNorm(), 0.0);
  if (std::abs(r0) == 0.0) throw ArgumentError("reconstruct: probe has zero autocorrelation peak");
  rec.peak = std::abs(r0);

  const Grid corr = nd_xcorr(h, measurement, !dual);
  Grid est(out_shape);
  std::vector<Index> idx(out_shape.size());
  std::vector<Index> src(out_shape.size());
  for (Index f = 0; f < est.size(); ++f) {
    est.unravel(f, idx);
    for (Index ax = 0; ax < h.rank(); ++ax) src[ax] = idx[ax] + h.extent(ax) - 1;
    est.data()[f] = corr(src) / r0;
  }
  rec.estimate = std::move(est);
  return rec;
}

ErrorReport recon_error(const Grid& truth, const Grid& estimate) {
  if (truth.shape() != estimate.shape()) {
    throw ArgumentError("recon_error: shape mismatch " + shape_string(truth.shape()) + " vs " +
                        shape_string(estimate.shape()));
  }
  const VectorXc diff = estimate.data() - truth.data();
  ErrorReport e;
  e.max_abs = diff.cwiseAbs().maxCoeff();
  const Real denom = truth.data().norm();
  e.rel_l2 = denom == 0.0 ? diff.norm() : diff.norm() / denom;
  return e;
}

}  // namespace huffseq
