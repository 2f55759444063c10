#include "huffseq/algebra.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace huffseq {

Sequence kron(const Sequence& f, const Sequence& g) {
  VectorXc v = Eigen::kroneckerProduct(f.values, g.values);
  return Sequence(Family::kComposite, Scalar{1.0}, std::move(v), "kron(" + f.tag() + "," + g.tag() + ")");
}

Grid outer(const Sequence& f, const Sequence& g) {
  return outer(f, Grid::from_sequence(g));
}

Grid outer(const Sequence& f, const Grid& g) {
  std::vector<Index> shape;
  shape.reserve(g.shape().size() + 1);
  shape.push_back(f.length());
  shape.insert(shape.end(), g.shape().begin(), g.shape().end());
  // Row-major with the new leading axis: block i is f_i * g.
  VectorXc data = Eigen::kroneckerProduct(f.values, g.data());
  return Grid(std::move(shape), std::move(data));
}

Sequence offset(const Sequence& f, Scalar c) {
  Sequence out = f;
  out.values.array() += c;
  return out;
}

Sequence scale(const Sequence& f, Scalar c) {
  Sequence out = f;
  out.values *= c;
  return out;
}

Sequence quantize_round(const Sequence& f) {
  if (!f.is_real()) throw ArgumentError("quantize_round needs a real-valued sequence, got complex " + f.tag());
  VectorXc v(f.length());
  for (Index i = 0; i < f.length(); ++i) {
    // std::round already rounds halfway cases away from zero
    Real r = std::round(f[i].real());
    v[i] = Scalar(r == 0.0 ? 0.0 : r, 0.0);
  }
  return Sequence(Family::kComposite, Scalar{1.0}, std::move(v), "round(" + f.tag() + ")");
}

VectorXi64 to_integer(const Sequence& f, Real tol) {
  VectorXi64 out(f.length());
  for (Index i = 0; i < f.length(); ++i) {
    const Scalar z = f[i];
    const Real r = std::round(z.real());
    if (std::abs(z.imag()) > tol || std::abs(z.real() - r) > tol * std::max(1.0, std::abs(r))) {
      throw ArgumentError("element " + std::to_string(i) + " of " + f.tag() + " is not an integer");
    }
    out[i] = static_cast<std::int64_t>(r);
  }
  return out;
}

Sequence reversed(const Sequence& f) {
  Sequence out = f;
  out.values = f.values.reverse().eval();
  return out;
}

Sequence dft(const Sequence& f, Index padded_length) {
  return Sequence(Family::kComposite, Scalar{1.0}, dft(f.values, padded_length), "dft(" + f.tag() + ")");
}

}  // namespace huffseq
