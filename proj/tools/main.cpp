// guf command-line tool: graph ingestion, spectra, uncertainty bounds,
// frame bounds, feasibility-region tracing, and complete-graph closed forms.
// Uses only the shared library's C interface.

#include <guf.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

[[noreturn]] void die_status(guf_status status) {
  die(status == GUF_ERROR_PARSE ? kExitParse : kExitDomain, guf_last_error());
}

void check(guf_status status) {
  if (status != GUF_OK) die_status(status);
}

using GraphPtr = std::unique_ptr<guf_graph, decltype(&guf_graph_free)>;
using BasisPtr = std::unique_ptr<guf_basis, decltype(&guf_basis_free)>;
using CurvePtr = std::unique_ptr<guf_curve, decltype(&guf_curve_free)>;
using RegionPtr = std::unique_ptr<guf_region, decltype(&guf_region_free)>;

struct SourceOptions {
  std::string input_path;
  int complete_n = 0;
  int cycle_n = 0;
  int path_n = 0;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("input", src.input_path, "edge-list file (one 'u v [w]' per line)");
  cmd->add_option("--complete", src.complete_n, "complete graph on N vertices");
  cmd->add_option("--cycle", src.cycle_n, "cycle graph on N vertices");
  cmd->add_option("--path", src.path_n, "path graph on N vertices");
}

GraphPtr load_graph(const SourceOptions& src) {
  int sources = (!src.input_path.empty() ? 1 : 0) + (src.complete_n > 0 ? 1 : 0) +
                (src.cycle_n > 0 ? 1 : 0) + (src.path_n > 0 ? 1 : 0);
  bool generator_given = src.complete_n != 0 || src.cycle_n != 0 || src.path_n != 0;
  if (sources != 1 && !(sources == 0 && generator_given))
    die(kExitParse, "exactly one input source required (file or --complete/--cycle/--path)");
  guf_graph* g = nullptr;
  if (!src.input_path.empty()) {
    std::ifstream file(src.input_path);
    if (!file) die(kExitParse, "cannot open input file: " + src.input_path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    check(guf_graph_parse(buffer.str().c_str(), &g));
  } else if (src.complete_n != 0) {
    check(guf_graph_complete(src.complete_n, &g));
  } else if (src.cycle_n != 0) {
    check(guf_graph_cycle(src.cycle_n, &g));
  } else {
    check(guf_graph_path(src.path_n, &g));
  }
  return GraphPtr(g, &guf_graph_free);
}

BasisPtr make_basis(const guf_graph* g) {
  guf_basis* b = nullptr;
  check(guf_basis_create(g, &b));
  return BasisPtr(b, &guf_basis_free);
}

std::vector<double> read_signal_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) die(kExitParse, "cannot open signal file: " + path);
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::string extra;
    if (fields >> extra)
      die(kExitParse, "signal file line " + std::to_string(line_no) + ": expected one value");
    try {
      size_t pos = 0;
      values.push_back(std::stod(token, &pos));
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      die(kExitParse, "signal file line " + std::to_string(line_no) + ": invalid number");
    }
  }
  return values;
}

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

json sample_json(const guf_duc_sample& s) {
  return json{{"alpha", s.alpha},   {"x", s.x},
              {"y", s.y},           {"m", s.m},
              {"mult", s.multiplicity}, {"h_minus", s.h_minus},
              {"h_plus", s.h_plus}};
}

void print_sample_csv(const guf_duc_sample& s) {
  std::printf("%.17g,%.17g,%.17g,%.17g,%d,%.17g,%.17g\n", s.alpha, s.x, s.y, s.m,
              s.multiplicity, s.h_minus, s.h_plus);
}

// ---- subcommand handlers -------------------------------------------------

int run_spectra(const SourceOptions& src, bool with_vectors) {
  GraphPtr g = load_graph(src);
  BasisPtr b = make_basis(g.get());
  int n = guf_graph_vertex_count(g.get());
  json out{{"n", n}};
  for (int normalized = 0; normalized <= 1; ++normalized) {
    std::vector<double> values(n);
    check(guf_basis_eigenvalues(b.get(), normalized, values.data()));
    json block{{"values", values}};
    if (with_vectors) {
      std::vector<double> vec(static_cast<size_t>(n) * n);
      check(guf_basis_eigenvectors(b.get(), normalized, vec.data()));
      json cols = json::array();
      for (int c = 0; c < n; ++c) {
        json col = json::array();
        for (int r = 0; r < n; ++r) col.push_back(vec[static_cast<size_t>(r) * n + c]);
        cols.push_back(col);
      }
      block["vectors"] = cols;
    }
    out[normalized ? "normalized_laplacian" : "laplacian"] = block;
  }
  emit(out);
  return 0;
}

int run_bounds(const SourceOptions& src, bool normalized) {
  GraphPtr g = load_graph(src);
  BasisPtr b = make_basis(g.get());
  int n = guf_graph_vertex_count(g.get());
  double lower = 0, upper = 0;
  check(guf_additive_bounds(b.get(), normalized, &lower, &upper));
  std::vector<double> spectrum(n);
  check(guf_modified_spectrum(b.get(), normalized, spectrum.data()));
  emit(json{{"lower", lower}, {"upper", upper}, {"spectrum", spectrum}});
  return 0;
}

int run_frame_bounds(const SourceOptions& src, int d, bool normalized) {
  GraphPtr g = load_graph(src);
  BasisPtr b = make_basis(g.get());
  int n = guf_graph_vertex_count(g.get());
  double lower = 0, upper = 0;
  check(guf_frame_bounds(b.get(), d, normalized, &lower, &upper));
  std::vector<double> spectrum(n);
  check(guf_modified_spectrum(b.get(), normalized, spectrum.data()));
  emit(json{{"d", d}, {"lower", lower}, {"upper", upper}, {"spectrum", spectrum}});
  return 0;
}

int run_duc(const SourceOptions& src, int points, bool csv) {
  GraphPtr g = load_graph(src);
  BasisPtr b = make_basis(g.get());
  guf_curve* raw = nullptr;
  check(guf_duc_curve(b.get(), points, &raw));
  CurvePtr curve(raw, &guf_curve_free);
  double axis_low_x = 0, axis_left_y = 0, lambda_max = 0;
  check(guf_curve_info(curve.get(), &axis_low_x, &axis_left_y, &lambda_max));
  int size = guf_curve_size(curve.get());
  if (csv) {
    std::printf("alpha,x,y,m,mult,h_minus,h_plus\n");
    for (int i = 0; i < size; ++i) {
      guf_duc_sample s;
      check(guf_curve_sample(curve.get(), i, &s));
      print_sample_csv(s);
    }
    return 0;
  }
  json samples = json::array();
  for (int i = 0; i < size; ++i) {
    guf_duc_sample s;
    check(guf_curve_sample(curve.get(), i, &s));
    samples.push_back(sample_json(s));
  }
  emit(json{{"lambda_max", lambda_max},
            {"axis_low", {{"x", axis_low_x}, {"y", 0.0}}},
            {"axis_left", {{"x", 0.0}, {"y", axis_left_y}}},
            {"samples", samples}});
  return 0;
}

int run_region(const SourceOptions& src, int points, int samples, std::uint64_t seed,
               bool csv) {
  GraphPtr g = load_graph(src);
  BasisPtr b = make_basis(g.get());
  guf_region* raw = nullptr;
  check(guf_region_compute(b.get(), points, samples, seed, &raw));
  RegionPtr region(raw, &guf_region_free);
  double axis_low_x = 0, axis_left_y = 0;
  check(guf_axis_points(b.get(), &axis_low_x, &axis_left_y));
  guf_region_report report;
  check(guf_region_get_report(region.get(), &report));

  guf_duc_sample low_anchor{0.0, axis_low_x, 0.0, 0.0, axis_low_x, axis_low_x, 1};
  guf_duc_sample left_anchor{-std::numeric_limits<double>::infinity(),
                             0.0,
                             axis_left_y,
                             axis_left_y,
                             0.0,
                             0.0,
                             1};
  auto is_anchor = [&](const guf_duc_sample& s) {
    return s.x == 0.0 || (s.y == 0.0 && s.x == axis_low_x);
  };

  if (csv) {
    std::printf("kind,alpha,x,y,m,mult,h_minus,h_plus\n");
    auto row = [](const char* kind, const guf_duc_sample& s) {
      std::printf("%s,%.17g,%.17g,%.17g,%.17g,%d,%.17g,%.17g\n", kind, s.alpha, s.x, s.y, s.m,
                  s.multiplicity, s.h_minus, s.h_plus);
    };
    row("anchor", left_anchor);
    row("anchor", low_anchor);
    for (int i = 0; i < guf_region_lower_size(region.get()); ++i) {
      guf_duc_sample s;
      check(guf_region_lower_sample(region.get(), i, &s));
      if (!is_anchor(s)) row("lower", s);
    }
    for (int i = 0; i < guf_region_upper_size(region.get()); ++i) {
      guf_duc_sample s;
      check(guf_region_upper_sample(region.get(), i, &s));
      if (!is_anchor(s)) row("upper", s);
    }
    double nan = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < guf_region_witness_size(region.get()); ++i) {
      double x = 0, y = 0;
      check(guf_region_witness(region.get(), i, &x, &y));
      std::printf("witness,%.17g,%.17g,%.17g,%.17g,%d,%.17g,%.17g\n", nan, x, y, nan, 0, nan,
                  nan);
    }
    return 0;
  }

  json lower = json::array();
  for (int i = 0; i < guf_region_lower_size(region.get()); ++i) {
    guf_duc_sample s;
    check(guf_region_lower_sample(region.get(), i, &s));
    lower.push_back(sample_json(s));
  }
  json upper = json::array();
  for (int i = 0; i < guf_region_upper_size(region.get()); ++i) {
    guf_duc_sample s;
    check(guf_region_upper_sample(region.get(), i, &s));
    upper.push_back(sample_json(s));
  }
  json witnesses = json::array();
  for (int i = 0; i < guf_region_witness_size(region.get()); ++i) {
    double x = 0, y = 0;
    check(guf_region_witness(region.get(), i, &x, &y));
    witnesses.push_back(json{{"x", x}, {"y", y}});
  }
  emit(json{{"lambda_max", report.lambda_max},
            {"lambda_tilde_0", report.lambda_tilde_0},
            {"axis_low", {{"x", axis_low_x}, {"y", 0.0}}},
            {"axis_left", {{"x", 0.0}, {"y", axis_left_y}}},
            {"upper_boundary_method",
             "mirrored max-eigenvalue trace; extends the lower-boundary theory"},
            {"lower", lower},
            {"upper", upper},
            {"witnesses", witnesses},
            {"report",
             {{"in_box", report.in_box != 0},
              {"half_plane_ok", report.half_plane_ok != 0},
              {"hull_ok", report.hull_ok != 0},
              {"midpoints_ok", report.midpoints_ok != 0},
              {"convex_ok", report.convex_ok != 0},
              {"circle_ok", report.circle_ok != 0},
              {"min_x_plus_y", report.min_x_plus_y},
              {"max_hull_violation", report.max_hull_violation}}}});
  return 0;
}

int run_transform(const SourceOptions& src, const std::string& signal_path, bool normalized,
                  bool inverse) {
  GraphPtr g = load_graph(src);
  BasisPtr b = make_basis(g.get());
  int n = guf_graph_vertex_count(g.get());
  std::vector<double> f = read_signal_file(signal_path);
  if (static_cast<int>(f.size()) != n)
    die(kExitDomain, "signal length " + std::to_string(f.size()) + " does not match graph order " +
                         std::to_string(n));
  std::vector<double> out(n);
  guf_status status;
  if (normalized)
    status = inverse ? guf_ingft(b.get(), f.data(), out.data())
                     : guf_ngft(b.get(), f.data(), out.data());
  else
    status = inverse ? guf_igft(b.get(), f.data(), out.data())
                     : guf_gft(b.get(), f.data(), out.data());
  check(status);
  emit(json(out));
  return 0;
}

int run_kn(int n, const std::string& mode, double alpha, bool alpha_given) {
  if (mode == "duc") {
    if (!alpha_given) die(kExitParse, "kn duc requires --alpha");
    double x = 0, y = 0;
    check(guf_kn_duc_point(n, alpha, &x, &y));
    emit(json{{"alpha", alpha}, {"x", x}, {"y", y}});
  } else if (mode == "eigen") {
    if (!alpha_given) die(kExitParse, "kn eigen requires --alpha");
    double middle = 0, a = 0, bb = 0;
    int32_t mult = 0;
    check(guf_kn_eigenstructure(n, alpha, &middle, &mult, &a, &bb));
    emit(json{{"alpha", alpha},
              {"middle", middle},
              {"middle_multiplicity", mult},
              {"outlier_a", a},
              {"outlier_b", bb}});
  } else if (mode == "bounds") {
    double lower = 0, upper = 0;
    check(guf_kn_additive_bounds(n, &lower, &upper));
    json frame_lower = json::array();
    for (int d = 2; d <= n; ++d) {
      double bound = 0;
      check(guf_kn_frame_lower(n, d, &bound));
      frame_lower.push_back(json{{"d", d}, {"bound", bound}});
    }
    emit(json{{"additive", {{"lower", lower}, {"upper", upper}}},
              {"frame_lower", frame_lower}});
  } else {
    die(kExitParse, "kn mode must be duc, bounds, or eigen");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral graph uncertainty and feasibility toolkit"};
  app.require_subcommand(1);

  SourceOptions src;

  auto* spectra = app.add_subcommand("spectra", "Laplacian and normalized-Laplacian spectra");
  add_source_options(spectra, src);
  bool with_vectors = false;
  spectra->add_flag("--vectors", with_vectors, "include eigenvector columns");

  auto* bounds = app.add_subcommand("bounds", "sharp additive uncertainty bounds");
  add_source_options(bounds, src);
  bool bounds_normalized = false;
  bounds->add_flag("--normalized", bounds_normalized, "use the normalized Laplacian pair");

  auto* frame_bounds = app.add_subcommand("frame-bounds", "sharp Parseval-frame bounds");
  add_source_options(frame_bounds, src);
  int frame_d = 2;
  bool frame_normalized = false;
  frame_bounds->add_option("-d,--dim", frame_d, "frame dimension d")->required();
  frame_bounds->add_flag("--normalized", frame_normalized, "use the normalized pair");

  auto* duc = app.add_subcommand("duc", "trace the differential uncertainty curve");
  add_source_options(duc, src);
  int duc_points = 64;
  bool duc_csv = false, duc_json = false;
  duc->add_option("--points", duc_points, "number of interior curve targets");
  duc->add_flag("--csv", duc_csv, "emit CSV");
  duc->add_flag("--json", duc_json, "emit JSON (default)");

  auto* region = app.add_subcommand("region", "trace the feasibility region");
  add_source_options(region, src);
  int region_points = 64, region_samples = 256;
  std::uint64_t region_seed = 0;
  bool region_csv = false, region_json = false;
  region->add_option("--points", region_points, "boundary targets per side");
  region->add_option("--samples", region_samples, "witness sample count");
  region->add_option("--seed", region_seed, "random seed for the witness cloud");
  region->add_flag("--csv", region_csv, "emit CSV");
  region->add_flag("--json", region_json, "emit JSON (default)");

  auto* transform = app.add_subcommand("transform", "graph Fourier transform of a signal");
  add_source_options(transform, src);
  std::string signal_path;
  bool transform_normalized = false, transform_inverse = false;
  transform->add_option("--signal", signal_path, "one-value-per-line signal file")->required();
  transform->add_flag("--normalized", transform_normalized, "use the normalized transform");
  transform->add_flag("--inverse", transform_inverse, "apply the inverse transform");

  auto* kn = app.add_subcommand("kn", "complete-graph closed forms");
  int kn_n = 0;
  std::string kn_mode;
  double kn_alpha = 0.0;
  kn->add_option("--n", kn_n, "vertex count")->required();
  kn->add_option("mode", kn_mode, "duc | bounds | eigen")->required();
  auto* alpha_opt = kn->add_option("--alpha", kn_alpha, "pencil parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::fflush(stdout);
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }

  try {
    if (spectra->parsed()) return run_spectra(src, with_vectors);
    if (bounds->parsed()) return run_bounds(src, bounds_normalized);
    if (frame_bounds->parsed()) return run_frame_bounds(src, frame_d, frame_normalized);
    if (duc->parsed()) {
      if (duc_csv && duc_json) die(kExitParse, "choose one of --csv/--json");
      return run_duc(src, duc_points, duc_csv);
    }
    if (region->parsed()) {
      if (region_csv && region_json) die(kExitParse, "choose one of --csv/--json");
      return run_region(src, region_points, region_samples, region_seed, region_csv);
    }
    if (transform->parsed())
      return run_transform(src, signal_path, transform_normalized, transform_inverse);
    if (kn->parsed()) return run_kn(kn_n, kn_mode, kn_alpha, alpha_opt->count() > 0);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  }
  return 0;
}
