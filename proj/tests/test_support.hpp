#pragma once

#include <initializer_list>

#include "huffseq/huffseq.hpp"
#include "oracle.hpp"

namespace test_support {

inline oracle::CVec to_cvec(const huffseq::Sequence& s) {
  return oracle::CVec(s.values.data(), s.values.data() + s.values.size());
}

inline oracle::CVec to_cvec(const huffseq::VectorXc& v) { return oracle::CVec(v.data(), v.data() + v.size()); }

inline huffseq::Sequence seq(std::initializer_list<double> xs) {
  huffseq::VectorXc v(static_cast<huffseq::Index>(xs.size()));
  huffseq::Index i = 0;
  for (double x : xs) v[i++] = x;
  return huffseq::make_sequence(v);
}

/// Every element equal to `expected` within an absolute+relative tolerance.
inline bool all_near(const huffseq::VectorXc& got, const oracle::CVec& expected, double tol) {
  if (static_cast<std::size_t>(got.size()) != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!oracle::near(got[static_cast<huffseq::Index>(i)], expected[i], tol)) return false;
  }
  return true;
}

inline bool all_near(const huffseq::Sequence& got, std::initializer_list<double> expected, double tol) {
  oracle::CVec e;
  for (double x : expected) e.emplace_back(x, 0.0);
  return all_near(got.values, e, tol);
}

}  // namespace test_support
