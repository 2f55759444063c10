#include "huffseq/sequence.hpp"

#include <array>
#include <numeric>
#include <utility>

namespace huffseq {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 17> kFamilyNames{{
    {Family::kFibonacci, "fib"},
    {Family::kH9a, "h9a"},
    {Family::kH9b, "h9b"},
    {Family::kH13a, "h13a"},
    {Family::kH13b, "h13b"},
    {Family::kH17, "h17"},
    {Family::kH17Matched, "h17l"},
    {Family::kH11, "h11"},
    {Family::kHe4, "he4"},
    {Family::kHe6, "he6"},
    {Family::kArbitrary, "harb"},
    {Family::kTangent, "htan"},
    {Family::kPlus, "hplus"},
    {Family::kPerfectFibonacci, "perfect-fib"},
    {Family::kPerfectArbitrary, "perfect-arb"},
    {Family::kFixture, "fixture"},
    {Family::kComposite, "composite"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "composite";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

Sequence::Sequence(Family fam, Scalar s, VectorXc v, std::string lbl)
    : family(fam), label(std::move(lbl)), scale(s), values(std::move(v)) {
  if (values.size() < 1) throw ArgumentError("sequence must have at least one element");
  for (Index i = 0; i < values.size(); ++i) {
    if (!is_finite(values[i])) {
      throw DomainError("non-finite element at index " + std::to_string(i) + " of " + tag());
    }
  }
}

std::string Sequence::tag() const {
  if (family == Family::kFixture) return "fixture:" + label;
  if (family == Family::kComposite && !label.empty()) return label;
  return std::string(family_name(family));
}

bool Sequence::is_real(Real tol) const {
  for (Index i = 0; i < values.size(); ++i) {
    if (!huffseq::is_real(values[i], tol)) return false;
  }
  return true;
}

Sequence make_sequence(std::initializer_list<Scalar> values, std::string label) {
  VectorXc v(static_cast<Index>(values.size()));
  Index i = 0;
  for (const auto& x : values) v[i++] = x;
  return Sequence(Family::kComposite, Scalar{1.0}, std::move(v), std::move(label));
}

Sequence make_sequence(const VectorXc& values, std::string label) {
  return Sequence(Family::kComposite, Scalar{1.0}, values, std::move(label));
}

Grid::Grid(std::vector<Index> shape, VectorXc data) : shape_(std::move(shape)), data_(std::move(data)) {
  if (shape_.empty()) throw ArgumentError("grid shape must have at least one axis");
  Index n = 1;
  for (Index e : shape_) {
    if (e < 1) throw ArgumentError("grid extents must be positive, got " + shape_string(shape_));
    n *= e;
  }
  if (n != data_.size()) {
    throw ArgumentError("grid data has " + std::to_string(data_.size()) + " elements, shape " +
                        shape_string(shape_) + " needs " + std::to_string(n));
  }
}

Grid::Grid(std::vector<Index> shape)
    : Grid(shape, VectorXc::Zero(std::accumulate(shape.begin(), shape.end(), Index{1}, std::multiplies<>{}))) {}

Grid Grid::from_sequence(const Sequence& s) { return Grid({s.length()}, s.values); }

Grid Grid::from_matrix(const Eigen::MatrixXcd& m) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m;
  return Grid({m.rows(), m.cols()}, Eigen::Map<const VectorXc>(rm.data(), rm.size()));
}

Index Grid::flat_index(std::span<const Index> idx) const {
  Index flat = 0;
  for (std::size_t a = 0; a < shape_.size(); ++a) flat = flat * shape_[a] + idx[a];
  return flat;
}

void Grid::unravel(Index flat, std::span<Index> idx) const {
  for (std::size_t a = shape_.size(); a-- > 0;) {
    idx[a] = flat % shape_[a];
    flat /= shape_[a];
  }
}

Eigen::MatrixXcd Grid::to_matrix() const {
  if (rank() != 2) throw ArgumentError("to_matrix needs a rank-2 grid, got shape " + shape_string(shape_));
  using RowMajor = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  return Eigen::Map<const RowMajor>(data_.data(), shape_[0], shape_[1]);
}

bool Grid::is_real(Real tol) const {
  for (Index i = 0; i < data_.size(); ++i) {
    if (!huffseq::is_real(data_[i], tol)) return false;
  }
  return true;
}

std::string shape_string(const std::vector<Index>& shape) {
  std::string out = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(shape[i]);
  }
  return out + "]";
}

}  // namespace huffseq
