#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "huffseq/algebra.hpp"
#include "huffseq/families.hpp"
#include "huffseq/io.hpp"

namespace huffseq::cli {

using nlohmann::json;

namespace {

Real parse_real(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      const Real v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    std::size_t ua = 0;
    std::size_t ub = 0;
    const Real num = std::stod(a, &ua);
    const Real den = std::stod(b, &ub);
    if (ua != a.size() || ub != b.size() || den == 0.0) throw std::invalid_argument(text);
    return num / den;
  } catch (const std::exception&) {
    throw ArgumentError("cannot parse number '" + text + "'");
  }
}

/// "re" or "re,im"; components may be fractions like 3/4.
Scalar parse_scale(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

std::string pretty(Real x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << x;
  return os.str();
}

struct SeqOptions {
  std::string family;
  std::string name;
  int n = 0;
  std::string s = "1";
  std::string s_phase;  // empty unless given
};

void add_seq_options(CLI::App* cmd, SeqOptions& o, bool family_required) {
  auto* fam = cmd->add_option("--family", o.family, "family id (see `list`) or fixture name");
  if (family_required) fam->required();
  cmd->add_option("--name", o.name, "fixture name when --family fixture");
  cmd->add_option("--n", o.n, "sequence length");
  cmd->add_option("--s", o.s, "scale parameter: re or re,im (fractions allowed)");
  cmd->add_option("--s-phase", o.s_phase, "unit-modulus scale s = exp(i*pi*x), x may be a fraction; overrides --s");
}

Sequence build_sequence(const SeqOptions& o) {
  FamilySpec spec;
  auto fam = parse_family(o.family);
  if (!fam) {
    // bare fixture names are accepted as families
    const auto names = fixture_names();
    if (std::find(names.begin(), names.end(), o.family) == names.end()) {
      throw ArgumentError("unknown family or fixture '" + o.family + "'");
    }
    spec.family = Family::kFixture;
    spec.fixture = o.family;
  } else {
    spec.family = *fam;
    spec.fixture = o.name;
  }
  if (spec.family == Family::kComposite) throw ArgumentError("'composite' is not a generator");
  if (spec.family == Family::kFixture && spec.fixture.empty()) throw ArgumentError("--family fixture needs --name");
  if (family_takes_length(spec.family) && o.n == 0) {
    throw ArgumentError("family '" + o.family + "' needs --n");
  }
  spec.n = o.n;
  spec.s = o.s_phase.empty() ? parse_scale(o.s) : std::polar(1.0, std::numbers::pi * parse_real(o.s_phase));
  return generate(spec);
}

json list_document() {
  json fams = json::array();
  for (Family f : {Family::kFibonacci, Family::kH9a, Family::kH9b, Family::kH13a, Family::kH13b, Family::kH17,
                   Family::kH17Matched, Family::kH11, Family::kHe4, Family::kHe6, Family::kArbitrary,
                   Family::kTangent, Family::kPlus, Family::kPerfectFibonacci, Family::kPerfectArbitrary}) {
    json e = {{"id", family_name(f)}, {"takes_length", family_takes_length(f)}};
    if (int n = family_fixed_length(f)) e["length"] = n;
    fams.push_back(e);
  }
  json fixtures = json::array();
  for (const auto& name : fixture_names()) {
    fixtures.push_back({{"name", name}, {"description", fixture_description(name)}});
  }
  return {{"families", fams}, {"fixtures", fixtures}, {"tool", io::kToolVersion}};
}

void emit(std::ostream& out, const json& j, const std::string& path) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    io::write_json(path, j);
  }
}

Grid probe_grid(const Sequence& h, Index rank) {
  if (rank < 1) throw ArgumentError("--dim must be >= 1");
  Grid g = Grid::from_sequence(h);
  for (Index d = 1; d < rank; ++d) g = outer(h, g);
  return g;
}

json analyze_sequence(const Sequence& f, bool periodic, bool dual, const std::vector<std::string>& metrics,
                      Real tol) {
  json doc = {{"input", f.tag()}, {"length", f.length()}, {"tool", io::kToolVersion}};
  if (periodic) {
    const CorrelationProfile p = periodic_autocorr(f);
    doc["profile"] = io::to_json(p);
    doc["perfect"] = is_perfect(f, tol);
  } else {
    const CorrelationProfile p = dual ? dual_autocorr(f) : autocorr(f);
    doc["profile"] = io::to_json(p);
    doc["canonical"] = io::to_json(dual ? is_dual_canonical(f, tol) : is_canonical(f, tol));
  }
  json m = json::object();
  for (const auto& name : metrics) {
    if (name == "merit") {
      const Real mf = merit_factor(f);
      m["merit"] = std::isinf(mf) ? json("inf") : json(mf);
    } else if (name == "flatness") {
      m["flatness"] = spectral_flatness(f);
    } else if (name == "peak") {
      m["peak"] = energy(f);
    } else if (!name.empty()) {
      throw ArgumentError("unknown metric '" + name + "' (expected merit, flatness, peak)");
    }
  }
  doc["metrics"] = m;
  return doc;
}

json analyze_grid(const Grid& g, bool dual, Real tol) {
  const Grid r = dual ? nd_dual_autocorr(g) : nd_autocorr(g);
  const CanonicalReport rep = is_canonical(g, tol, dual);
  Index nonzero = 0;
  const Real peak = rep.peak;
  for (Index i = 0; i < r.size(); ++i) {
    if (std::abs(r.data()[i]) > tol * peak) ++nonzero;
  }
  return {{"input", "grid"},
          {"shape", g.shape()},
          {"profile", io::to_json(r, dual ? "dual_autocorr" : "autocorr")},
          {"canonical", io::to_json(rep)},
          {"nonzero_entries", nonzero},
          {"tool", io::kToolVersion}};
}

Sequence as_sequence(const io::Document& d, const std::string& what) {
  if (const auto* s = std::get_if<Sequence>(&d)) return *s;
  throw ArgumentError(what + " must be a 1D sequence document");
}

Grid as_grid(const io::Document& d) {
  if (const auto* g = std::get_if<Grid>(&d)) return *g;
  return Grid::from_sequence(std::get<Sequence>(d));
}

Grid read_object(const std::string& path) {
  const bool is_json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return is_json ? as_grid(io::read_document(path)) : io::read_csv_grid_file(path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Huffman-type delta-correlated sequences: generate, analyse, compose, de-blur"};
  app.require_subcommand(1);

  SeqOptions gen_opts;
  std::string gen_out;
  bool gen_list = false;
  auto* gen = app.add_subcommand("gen", "generate a sequence");
  add_seq_options(gen, gen_opts, false);
  gen->add_option("--out", gen_out, "write JSON here instead of stdout");
  gen->add_flag("--list", gen_list, "list families and fixtures");

  auto* list = app.add_subcommand("list", "list families and fixtures");

  std::string an_in;
  bool an_periodic = false;
  bool an_dual = false;
  bool an_csv = false;
  double an_tol = kDefaultTol;
  std::vector<std::string> an_metrics{"peak", "merit", "flatness"};
  auto* analyze = app.add_subcommand("analyze", "correlation profile and metrics of a sequence or grid");
  analyze->add_option("--in", an_in, "sequence or grid JSON")->required();
  analyze->add_flag("--periodic", an_periodic, "cyclic autocorrelation and perfect-array test");
  analyze->add_flag("--dual", an_dual, "conjugate-free autocorrelation");
  analyze->add_flag("--csv", an_csv, "emit lag,re,im rows instead of JSON");
  analyze->add_option("--tol", an_tol, "relative tolerance for canonical/perfect tests");
  analyze->add_option("--metrics", an_metrics, "comma list of merit,flatness,peak")->delimiter(',');

  std::string co_op;
  std::vector<std::string> co_files;
  std::string co_out;
  auto* compose = app.add_subcommand("compose", "Kronecker or outer product of two documents");
  compose->add_option("--op", co_op, "kron or outer")->required()->check(CLI::IsMember({"kron", "outer"}));
  compose->add_option("files", co_files, "two input documents")->required()->expected(2);
  compose->add_option("--out", co_out, "write JSON here instead of stdout");

  auto* demo = app.add_subcommand("demo", "imaging demonstrations");
  demo->require_subcommand(1);
  SeqOptions dose_opts;
  dose_opts.family = "fib";
  int dose_dim = 2;
  auto* dose_cmd = demo->add_subcommand("dose", "pedestal vs split-sign mask dose");
  add_seq_options(dose_cmd, dose_opts, false);
  dose_cmd->add_option("--dim", dose_dim, "array rank built by repeated outer products");

  SeqOptions deb_opts;
  deb_opts.family = "fib";
  std::string deb_object;
  std::string deb_masks = "split";
  std::string deb_out;
  auto* deblur = demo->add_subcommand("deblur", "blur an object with a probe, then de-correlate");
  add_seq_options(deblur, deb_opts, false);
  deblur->add_option("--object", deb_object, "object as CSV rows or JSON grid")->required();
  deblur->add_option("--masks", deb_masks, "split, pedestal or complex")
      ->check(CLI::IsMember({"split", "pedestal", "complex"}));
  deblur->add_option("--out", deb_out, "write the reconstructed object grid here");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitArgument;
  }

  try {
    if (list->parsed() || (gen->parsed() && gen_list)) {
      out << list_document().dump(2) << '\n';
      return kExitOk;
    }
    if (gen->parsed()) {
      if (gen_opts.family.empty()) throw ArgumentError("gen needs --family (or --list)");
      emit(out, io::to_json(build_sequence(gen_opts)), gen_out);
      return kExitOk;
    }
    if (analyze->parsed()) {
      const io::Document doc = io::read_document(an_in);
      if (const auto* g = std::get_if<Grid>(&doc)) {
        if (an_periodic) throw ArgumentError("--periodic applies to 1D sequences only");
        out << analyze_grid(*g, an_dual, an_tol).dump(2) << '\n';
        return kExitOk;
      }
      const Sequence& f = std::get<Sequence>(doc);
      if (f.length() < 2) throw ArgumentError("cannot analyze a length-1 sequence");
      if (an_csv) {
        io::write_profile_csv(out, an_periodic ? periodic_autocorr(f) : an_dual ? dual_autocorr(f) : autocorr(f));
        return kExitOk;
      }
      out << analyze_sequence(f, an_periodic, an_dual, an_metrics, an_tol).dump(2) << '\n';
      return kExitOk;
    }
    if (compose->parsed()) {
      const io::Document a = io::read_document(co_files[0]);
      const io::Document b = io::read_document(co_files[1]);
      if (co_op == "kron") {
        emit(out, io::to_json(kron(as_sequence(a, "kron input"), as_sequence(b, "kron input"))), co_out);
      } else {
        const Sequence f = as_sequence(a, "first outer input");
        emit(out, io::to_json(outer(f, as_grid(b)), "outer"), co_out);
      }
      return kExitOk;
    }
    if (dose_cmd->parsed()) {
      const Sequence h = build_sequence(dose_opts);
      const Grid g = probe_grid(h, dose_dim);
      if (!g.is_real()) throw ArgumentError("dose demo needs a real-valued probe");
      const Real kappa = pedestal_min(g);
      const Real ped = dose(pedestal_masks(g, kappa)).total_dose;
      const Real split = dose(split_signs(g)).total_dose;
      const Real ratio = ped / split;
      json doc = {{"probe", h.tag()},
                  {"shape", g.shape()},
                  {"min_element", g.data().real().minCoeff()},
                  {"max_element", g.data().real().maxCoeff()},
                  {"kappa", kappa},
                  {"pedestal", ped},
                  {"split", split},
                  {"ratio", ratio},
                  {"summary", "pedestal dose " + pretty(ped) + ", split-sign dose " + pretty(split) +
                                  ", ratio " + pretty(ratio) + "x"},
                  {"tool", io::kToolVersion}};
      out << doc.dump(2) << '\n';
      return kExitOk;
    }
    if (deblur->parsed()) {
      const Grid object = read_object(deb_object);
      const Sequence h = build_sequence(deb_opts);
      const Grid probe = probe_grid(h, object.rank());
      const bool complex_probe = !probe.is_real();
      MaskSet masks;
      if (deb_masks == "complex" || complex_probe) {
        masks = split_complex(probe);
      } else if (deb_masks == "pedestal") {
        masks = pedestal_masks(probe);
      } else {
        masks = split_signs(probe);
      }
      const Grid measured = measure(object, masks);
      const Reconstruction rec = reconstruct(measured, probe, complex_probe);
      const ErrorReport e = recon_error(object, rec.estimate);
      const Real max_obj = object.data().cwiseAbs().maxCoeff();
      json doc = {{"probe", h.tag()},
                  {"probe_shape", probe.shape()},
                  {"object_shape", object.shape()},
                  {"masks", mask_kind_name(masks.kind)},
                  {"dose", io::to_json(dose(masks))},
                  {"peak", rec.peak},
                  {"canonical", rec.canonical},
                  {"max_abs_error", e.max_abs},
                  {"rel_l2_error", e.rel_l2},
                  {"end_term_bound", 2.0 * max_obj / rec.peak},
                  {"summary", "max error " + pretty(e.max_abs) + " (" + pretty(100.0 * e.rel_l2) + "% rel L2)"},
                  {"tool", io::kToolVersion}};
      if (!rec.warning.empty()) doc["warning"] = rec.warning;
      if (!rec.warning.empty()) err << "warning: " << rec.warning << '\n';
      if (!deb_out.empty()) io::write_json(deb_out, io::to_json(rec.estimate, "reconstruction"));
      out << doc.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const nlohmann::json::exception& e) {
    err << "malformed document: " << e.what() << '\n';
    return kExitArgument;
  }
  return kExitArgument;
}

}  // namespace huffseq::cli
