#pragma once

#include <string>
#include <vector>

#include "huffseq/metrics.hpp"

namespace huffseq {

enum class MaskKind { kPedestal, kSplitSign, kSplitComplex };

std::string_view mask_kind_name(MaskKind k);

/// Non-negative masks whose recombination reproduces a signed or complex array.
///   split_sign:    H = M1 - M2
///   split_complex: H = (M1re - M2re) + i (M1im - M2im)
///   pedestal:      masks H + kappa and kappa - H, H = (M1 - M2) / 2
struct MaskSet {
  MaskKind kind = MaskKind::kSplitSign;
  std::vector<Grid> masks;
  Real kappa = 0.0;
};

struct DoseReport {
  Real total_dose = 0.0;
  std::vector<Real> per_mask;
};

MaskSet split_signs(const Grid& h);
MaskSet split_complex(const Grid& h);
/// Smallest kappa that keeps both pedestal masks non-negative: max|h|.
Real pedestal_min(const Grid& h);
MaskSet pedestal_masks(const Grid& h, Real kappa);
inline MaskSet pedestal_masks(const Grid& h) { return pedestal_masks(h, pedestal_min(h)); }

Grid recombine(const MaskSet& m);
DoseReport dose(const MaskSet& m);

/// Full linear convolution S = O * h.
Grid blur(const Grid& object, const Grid& h);
/// Simulated acquisition with one exposure per mask, recombined per kind.
Grid measure(const Grid& object, const MaskSet& m);

/// nD canonical test: every autocorrelation entry whose lag is not 0 or
/// +-(n-1) on each axis must satisfy |r| <= tol * P.
CanonicalReport is_canonical(const Grid& h, Real tol, bool dual);

struct Reconstruction {
  Grid estimate;
  bool canonical = true;
  Real peak = 0.0;
  std::string warning;  // non-empty when h failed the canonical check
};

/// Correlate the measurement with h (conjugated unless `dual`) and divide by
/// the zero-lag autocorrelation. The estimate has shape S - h + 1.
Reconstruction reconstruct(const Grid& measurement, const Grid& h, bool dual = false);

struct ErrorReport {
  Real max_abs = 0.0;
  Real rel_l2 = 0.0;
};

ErrorReport recon_error(const Grid& truth, const Grid& estimate);

}  // namespace huffseq
