#include "huffseq/correlation.hpp"

namespace huffseq {

namespace {

CorrelationProfile summarize(VectorXc values, CorrelationKind kind, Index zero_lag, bool trim_extremes) {
  CorrelationProfile p;
  p.kind = kind;
  p.zero_lag = zero_lag;
  p.peak = std::abs(values[zero_lag]);
  p.end_values = {values[0], values[values.size() - 1]};
  const Index lo = trim_extremes ? 1 : 0;
  const Index hi = trim_extremes ? values.size() - 2 : values.size() - 1;
  for (Index i = lo; i <= hi; ++i) {
    if (i == zero_lag) continue;
    const Real mag = std::abs(values[i]);
    if (mag > p.max_interior_offpeak) {
      p.max_interior_offpeak = mag;
      p.worst_lag = i - zero_lag;
    }
  }
  p.values = std::move(values);
  return p;
}

struct Coordinates {
  // coords[flat * rank + axis]
  std::vector<Index> coords;
  Index rank = 0;
};

Coordinates enumerate(const Grid& g) {
  Coordinates c;
  c.rank = g.rank();
  c.coords.resize(static_cast<std::size_t>(g.size() * c.rank));
  for (Index f = 0; f < g.size(); ++f) {
    g.unravel(f, std::span<Index>(c.coords.data() + f * c.rank, static_cast<std::size_t>(c.rank)));
  }
  return c;
}

void require_same_rank(const Grid& a, const Grid& b, std::string_view what) {
  if (a.rank() != b.rank()) {
    throw ArgumentError(std::string(what) + ": rank mismatch " + shape_string(a.shape()) + " vs " +
                        shape_string(b.shape()));
  }
}

// out[(sign_a * ia + ib + base)] += op(a[ia]) * b[ib]
template <typename Op>
Grid nd_accumulate(const Grid& a, const Grid& b, Index sign_a, Op op) {
  const Index rank = a.rank();
  std::vector<Index> shape(static_cast<std::size_t>(rank));
  std::vector<Index> base(static_cast<std::size_t>(rank));
  for (Index ax = 0; ax < rank; ++ax) {
    shape[ax] = a.extent(ax) + b.extent(ax) - 1;
    base[ax] = sign_a < 0 ? a.extent(ax) - 1 : 0;
  }
  Grid out(shape);
  const Coordinates ca = enumerate(a);
  const Coordinates cb = enumerate(b);
  std::vector<Index> strides(static_cast<std::size_t>(rank));
  Index stride = 1;
  for (Index ax = rank; ax-- > 0;) {
    strides[ax] = stride;
    stride *= shape[ax];
  }
  for (Index ia = 0; ia < a.size(); ++ia) {
    const Scalar av = op(a.data()[ia]);
    if (av == Scalar{0.0}) continue;
    Index offset_a = 0;
    for (Index ax = 0; ax < rank; ++ax) offset_a += (sign_a * ca.coords[ia * rank + ax] + base[ax]) * strides[ax];
    for (Index ib = 0; ib < b.size(); ++ib) {
      Index flat = offset_a;
      for (Index ax = 0; ax < rank; ++ax) flat += cb.coords[ib * rank + ax] * strides[ax];
      out.data()[flat] += av * b.data()[ib];
    }
  }
  return out;
}

}  // namespace

std::string_view kind_name(CorrelationKind k) {
  switch (k) {
    case CorrelationKind::kAperiodic:
      return "aperiodic";
    case CorrelationKind::kPeriodic:
      return "periodic";
    case CorrelationKind::kDualAperiodic:
      return "dual_aperiodic";
    case CorrelationKind::kCross:
      return "cross";
    case CorrelationKind::kDualCross:
      return "dual_cross";
  }
  return "aperiodic";
}

CorrelationProfile xcorr(const Sequence& f, const Sequence& g, bool conjugate) {
  VectorXc r = xcorr_values(f.values, g.values, conjugate);
  const bool same = &f == &g || (f.length() == g.length() && f.values == g.values);
  CorrelationKind kind = conjugate ? CorrelationKind::kCross : CorrelationKind::kDualCross;
  if (same) kind = conjugate ? CorrelationKind::kAperiodic : CorrelationKind::kDualAperiodic;
  return summarize(std::move(r), kind, f.length() - 1, true);
}

CorrelationProfile autocorr(const Sequence& f) { return xcorr(f, f, true); }

CorrelationProfile dual_autocorr(const Sequence& f) { return xcorr(f, f, false); }

CorrelationProfile periodic_autocorr(const Sequence& f) {
  if (f.length() < 2) throw ArgumentError("periodic autocorrelation needs at least 2 elements");
  return summarize(periodic_autocorr_values(f.values), CorrelationKind::kPeriodic, 0, false);
}

Grid nd_xcorr(const Grid& a, const Grid& b, bool conjugate) {
  require_same_rank(a, b, "nd_xcorr");
  if (conjugate) return nd_accumulate(a, b, -1, [](const Scalar& z) { return std::conj(z); });
  return nd_accumulate(a, b, -1, [](const Scalar& z) { return z; });
}

Grid nd_autocorr(const Grid& g) { return nd_xcorr(g, g, true); }

Grid nd_dual_autocorr(const Grid& g) { return nd_xcorr(g, g, false); }

Grid nd_convolve(const Grid& a, const Grid& b) {
  require_same_rank(a, b, "nd_convolve");
  return nd_accumulate(a, b, 1, [](const Scalar& z) { return z; });
}

}  // namespace huffseq
