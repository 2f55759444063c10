#include <algorithm>
#include <cmath>
#include <map>

#include "huffseq/families.hpp"

namespace huffseq {

namespace {

struct FixtureEntry {
  std::string_view description;
  std::vector<Scalar> values;
};

std::vector<Scalar> ints(std::initializer_list<int> xs) {
  std::vector<Scalar> out;
  out.reserve(xs.size());
  for (int x : xs) out.emplace_back(static_cast<Real>(x), 0.0);
  return out;
}

const std::map<std::string, FixtureEntry, std::less<>>& registry() {
  static const std::map<std::string, FixtureEntry, std::less<>> table = [] {
    using namespace std::complex_literals;
    const Real r3 = std::sqrt(3.0);
    std::map<std::string, FixtureEntry, std::less<>> t;
    t["quasi9"] = {"length-9 quasi-Huffman, off-peak |r| <= 1", ints({1, 1, -1, -3, -1, 1, -2, 1, -1})};
    t["b13"] = {"Barker sequence of length 13", ints({1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1})};
    t["b13var"] = {"Barker 13 with the centre term changed from -1 to -2",
                   ints({1, 1, 1, 1, 1, -1, -2, 1, 1, -1, 1, -1, 1})};
    t["b13_alt"] = {"length-13 vector differing from Barker 13 in the last three signs (not a Barker sequence)",
                        ints({1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, -1})};
    t["ternary_barker"] = {"ternary Barker sequence of length 17, merit factor 50/7",
                           ints({1, 1, 1, 0, -1, 0, 0, 0, 1, -1, 0, 1, -1, 0, 0, 1, -1})};
    t["h5"] = {"canonical H_5(1)", ints({1, 2, 2, -2, 1})};
    t["h86"] = {"4-bit quasi-Huffman of length 86",
                ints({-1, 0,  1,  0,  -1, 0,  2,  -1, -1, -2, 1,  -2, 1,  2,  4,  -2, -1, -2, -1, -5, 2,  4,
                      6,  -5, 1,  0,  -3, -5, 4,  2,  6,  -3, -1, 5,  -4, 1,  3,  -4, 2,  5,  -5, 6,  6,  4,
                      -3, 0,  2,  -2, 3,  1,  0,  4,  4,  1,  5,  3,  6,  -3, -2, -3, -2, 2,  -6, -2, -6, 2,
                      2,  1,  0,  -4, 3,  1,  3,  0,  -2, 1,  0,  3,  -1, 0,  -1, 0,  1,  -1, 1,  -1})};
    t["even6"] = {"even-length quasi-Huffman", ints({1, 2, 1, -2, 1, -1})};
    t["even8a"] = {"even-length quasi-Huffman", ints({1, 3, 4, 0, -3, 3, -2, 1})};
    t["even8b"] = {"even-length quasi-Huffman with asymmetric end magnitudes", ints({1, -1, 0, 3, -6, 5, 5, 4})};
    t["hp10_zero_head"] = {"halved perfect H_10(1) with 0 in place of -1/2 at the head (fails the periodic check)",
                         ints({0, -3, 2, -1, 1, 0, 1, 1, 2, 3})};
    t["hint7_i"] = {"H_int^7(i)/2, Gaussian-integer dual-canonical sequence",
                    {0.5i, -1.0 + 0i, -1.0i, 1.0 + 0i, 1.0i, -1.0 + 0i, -0.5i}};
    t["hint7_unit"] = {"H_int^7(e^{5 pi i/6}), unit-modulus dual-canonical sequence",
                       {0.5 * (1.0i - r3), 0.5 * (-1.0 - 1.0i * r3), 0.5 * (1.0i + r3), Scalar{-1.0},
                        0.5 * (-1.0i + r3), 0.5 * (-1.0 + 1.0i * r3), 0.5 * (-1.0i - r3)}};
    return t;
  }();
  return table;
}

}  // namespace

Sequence fixture(std::string_view name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw ArgumentError("unknown fixture '" + std::string(name) + "'");
  VectorXc v(static_cast<Index>(it->second.values.size()));
  std::copy(it->second.values.begin(), it->second.values.end(), v.begin());
  return Sequence(Family::kFixture, Scalar{1.0}, std::move(v), it->first);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

std::string_view fixture_description(std::string_view name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw ArgumentError("unknown fixture '" + std::string(name) + "'");
  return it->second.description;
}

}  // namespace huffseq
