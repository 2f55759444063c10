#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "huffseq/types.hpp"

namespace huffseq {

enum class Family {
  kFibonacci,
  kH9a,
  kH9b,
  kH13a,
  kH13b,
  kH17,
  kH17Matched,
  kH11,
  kHe4,
  kHe6,
  kArbitrary,
  kTangent,
  kPlus,
  kPerfectFibonacci,
  kPerfectArbitrary,
  kFixture,
  kComposite,  // results of kron/outer/offset/etc. and externally loaded data
};

/// Short identifier used by the CLI and the JSON "family" field.
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// A 1D sequence with provenance. Elements are always finite.
struct Sequence {
  Family family = Family::kComposite;
  std::string label;  // fixture name, or free-form tag for composites
  Scalar scale{1.0, 0.0};
  VectorXc values;

  Sequence() = default;
  Sequence(Family fam, Scalar s, VectorXc v, std::string lbl = {});

  Index length() const { return values.size(); }
  const Scalar& operator[](Index i) const { return values[i]; }

  /// "fib", "fixture:quasi9", "kron" ...
  std::string tag() const;

  bool is_real(Real tol = kDefaultTol) const;
};

Sequence make_sequence(std::initializer_list<Scalar> values, std::string label = {});
Sequence make_sequence(const VectorXc& values, std::string label = {});

/// Dense nD array stored row-major.
class Grid {
 public:
  Grid() = default;
  Grid(std::vector<Index> shape, VectorXc data);
  explicit Grid(std::vector<Index> shape);  // zero-filled

  static Grid from_sequence(const Sequence& s);
  static Grid from_matrix(const Eigen::MatrixXcd& m);

  const std::vector<Index>& shape() const { return shape_; }
  Index rank() const { return static_cast<Index>(shape_.size()); }
  Index size() const { return data_.size(); }
  Index extent(Index axis) const { return shape_[static_cast<std::size_t>(axis)]; }

  const VectorXc& data() const { return data_; }
  VectorXc& data() { return data_; }

  Scalar& operator()(std::span<const Index> idx) { return data_[flat_index(idx)]; }
  const Scalar& operator()(std::span<const Index> idx) const { return data_[flat_index(idx)]; }

  Index flat_index(std::span<const Index> idx) const;
  void unravel(Index flat, std::span<Index> idx) const;

  /// View a rank-2 grid as a matrix (rows = axis 0).
  Eigen::MatrixXcd to_matrix() const;

  bool is_real(Real tol = kDefaultTol) const;

 private:
  std::vector<Index> shape_;
  VectorXc data_;
};

std::string shape_string(const std::vector<Index>& shape);

}  // namespace huffseq
