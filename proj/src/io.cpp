#include "huffseq/io.hpp"

#include <fstream>
#include <sstream>

namespace huffseq::io {

using nlohmann::json;

namespace {

json scalar_json(const Scalar& z) {
  // +0.0 instead of -0.0 keeps output stable across platforms
  return json::array({z.real() + 0.0, z.imag() + 0.0});
}

Scalar scalar_from(const json& j) {
  if (j.is_number()) return {j.get<Real>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<Real>(), j[1].get<Real>()};
  }
  throw ArgumentError("malformed scalar " + j.dump() + ", expected [re, im] or a number");
}

VectorXc elements_from(const json& j) {
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw ArgumentError("document has no \"elements\" array");
  }
  const json& e = j["elements"];
  if (e.empty()) throw ArgumentError("\"elements\" is empty");
  VectorXc v(static_cast<Index>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) v[static_cast<Index>(i)] = scalar_from(e[i]);
  return v;
}

std::pair<Family, std::string> family_from(const json& j) {
  const std::string name = j.value("family", std::string("composite"));
  if (name.rfind("fixture:", 0) == 0) return {Family::kFixture, name.substr(8)};
  if (auto f = parse_family(name); f && *f != Family::kFixture) return {*f, {}};
  return {Family::kComposite, name};
}

json values_json(const VectorXc& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(scalar_json(v[i]));
  return arr;
}

}  // namespace

json to_json(const Sequence& s) {
  return {{"family", s.tag()},
          {"scale", scalar_json(s.scale)},
          {"length", s.length()},
          {"elements", values_json(s.values)},
          {"tool", kToolVersion}};
}

json to_json(const Grid& g, const std::string& family) {
  return {{"family", family},
          {"scale", scalar_json(Scalar{1.0})},
          {"shape", g.shape()},
          {"elements", values_json(g.data())},
          {"tool", kToolVersion}};
}

json to_json(const CorrelationProfile& p) {
  json ends = json::array({scalar_json(p.end_values.first), scalar_json(p.end_values.second)});
  return {{"kind", kind_name(p.kind)},
          {"min_lag", p.min_lag()},
          {"values", values_json(p.values)},
          {"peak", p.peak},
          {"end_values", ends},
          {"max_interior_offpeak", p.max_interior_offpeak},
          {"worst_lag", p.worst_lag}};
}

json to_json(const CanonicalReport& r) {
  return {{"is_canonical", r.is_canonical},
          {"tolerance", r.tolerance},
          {"worst_lag", r.worst_lag},
          {"worst_residual", r.worst_residual},
          {"peak", r.peak}};
}

json to_json(const DoseReport& d) { return {{"total_dose", d.total_dose}, {"per_mask", d.per_mask}}; }

Sequence sequence_from_json(const json& j) {
  if (!j.is_object()) throw ArgumentError("sequence document must be a JSON object");
  VectorXc v = elements_from(j);
  if (j.contains("shape")) {
    const auto shape = j["shape"].get<std::vector<Index>>();
    if (shape.size() != 1) throw ArgumentError("expected a 1D sequence, got shape " + shape_string(shape));
  }
  auto [fam, label] = family_from(j);
  const Scalar s = j.contains("scale") ? scalar_from(j["scale"]) : Scalar{1.0};
  return Sequence(fam, s, std::move(v), std::move(label));
}

Grid grid_from_json(const json& j) {
  if (!j.is_object()) throw ArgumentError("grid document must be a JSON object");
  VectorXc v = elements_from(j);
  std::vector<Index> shape{v.size()};
  if (j.contains("shape")) {
    if (!j["shape"].is_array()) throw ArgumentError("\"shape\" must be an array of positive integers");
    shape = j["shape"].get<std::vector<Index>>();
  }
  return Grid(std::move(shape), std::move(v));
}

Document document_from_json(const json& j) {
  if (j.is_object() && j.contains("shape") && j["shape"].is_array() && j["shape"].size() != 1) {
    return grid_from_json(j);
  }
  return sequence_from_json(j);
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ArgumentError("malformed JSON in '" + path + "': " + e.what());
  }
  try {
    return document_from_json(j);
  } catch (const json::exception& e) {
    throw ArgumentError("malformed document '" + path + "': " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

Grid read_csv_grid(std::istream& in) {
  std::vector<std::vector<Real>> rows;
  std::string line;
  while (std::getline(in, line)) {
    for (char& c : line) {
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    }
    std::istringstream ls(line);
    std::vector<Real> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ArgumentError("malformed CSV value '" + tok + "' on row " + std::to_string(rows.size() + 1));
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ArgumentError("CSV object is empty");
  const std::size_t cols = rows.front().size();
  VectorXc data(static_cast<Index>(rows.size() * cols));
  Index k = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw ArgumentError("CSV rows have unequal lengths");
    for (Real x : row) data[k++] = Scalar(x, 0.0);
  }
  if (rows.size() == 1) return Grid({static_cast<Index>(cols)}, std::move(data));
  return Grid({static_cast<Index>(rows.size()), static_cast<Index>(cols)}, std::move(data));
}

Grid read_csv_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  return read_csv_grid(in);
}

void write_profile_csv(std::ostream& out, const CorrelationProfile& p) {
  out << "lag,re,im\n";
  out.precision(17);
  for (Index i = 0; i < p.values.size(); ++i) {
    out << (i - p.zero_lag) << ',' << p.values[i].real() << ',' << p.values[i].imag() << '\n';
  }
}

}  // namespace huffseq::io
