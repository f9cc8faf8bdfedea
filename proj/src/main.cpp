// Command-line front end: validate / solve / certify / volume / fill / sweep /
// homology / pd2tri over triangulation, linking-matrix, and planar-diagram
// files. Stdout is the deterministic result payload; diagnostics go to stderr.
// Exit codes: 0 success, 1 verification failure, 2 unknown subcommand,
// 3 input error.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cuspcert/diagram.hpp"
#include "cuspcert/exact.hpp"
#include "cuspcert/filling.hpp"
#include "cuspcert/format.hpp"
#include "cuspcert/gluing.hpp"
#include "cuspcert/homology.hpp"
#include "cuspcert/krawczyk.hpp"
#include "cuspcert/solver.hpp"
#include "cuspcert/triangulation.hpp"
#include "cuspcert/volume.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cuspcert;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUnknownCommand = 2;
constexpr int kInputError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-invocation state: formatting mode, solver seed, and the run-report
// accumulator (input digests, stage timings, result payload).
struct Session {
  long long seed = 0;
  bool hex = false;
  std::string report_path;

  ordered_json inputs = ordered_json::object();
  std::vector<std::pair<std::string, double>> timings;
  ordered_json payload;
  std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

  SolveOptions solver() const {
    SolveOptions o;
    o.seed = static_cast<unsigned long long>(seed);
    return o;
  }
  std::string fmt(double v) const { return hex ? hex_float(v) : sig15(v); }
  std::string fmt_lo(double v) const { return hex ? hex_float(v) : sig15_down(v); }
  std::string fmt_hi(double v) const { return hex ? hex_float(v) : sig15_up(v); }

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    inputs[path] = fnv1a64_hex(text);
    return text;
  }

  void stage(const char* name) {
    auto t = std::chrono::steady_clock::now();
    timings.emplace_back(name, std::chrono::duration<double>(t - mark).count());
    mark = t;
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed: " + path);
}

int fail(const char* what, const std::exception& e, int code) {
  std::fprintf(stderr, "%s: %s\n", what, e.what());
  return code;
}

IdealTriangulation load_triangulation(Session& s, const std::string& file) {
  IdealTriangulation tri = IdealTriangulation::parse(s.read(file));
  s.stage("parse");
  return tri;
}

// Solve/certify/volume/fill/sweep all require a structurally valid complex.
void require_valid(const IdealTriangulation& tri) {
  auto rep = tri.validate();
  if (!rep.pass) throw InputError("invalid triangulation: " + rep.failures.front());
}

std::vector<Slope> parse_slopes(const std::string& text) {
  std::vector<Slope> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Slope::parse(item));
  if (out.empty()) throw SlopeError("empty slope list");
  return out;
}

// "p/q1..p/q2" (inclusive, q stepping by one) or a comma-separated list.
std::vector<Slope> parse_family(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return parse_slopes(text);
  Slope a = Slope::parse(text.substr(0, dots));
  Slope b = Slope::parse(text.substr(dots + 2));
  if (!a.filled() || !b.filled()) throw SlopeError("slope range endpoints must be filled");
  if (a.p() != b.p()) throw SlopeError("slope range endpoints must share the numerator");
  long long step = a.q() <= b.q() ? 1 : -1;
  std::vector<Slope> out;
  for (long long q = a.q();; q += step) {
    out.push_back(Slope::of(a.p(), q));
    if (q == b.q()) break;
  }
  return out;
}

std::string join_slopes(const std::vector<Slope>& slopes) {
  std::string out;
  for (size_t i = 0; i < slopes.size(); ++i) {
    if (i) out += ",";
    out += slopes[i].str();
  }
  return out;
}

int cmd_validate(Session& s, const std::string& file) {
  IdealTriangulation tri;
  try {
    tri = load_triangulation(s, file);
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  auto rep = tri.validate();
  s.stage("validate");
  std::printf("name %s\n", tri.name.c_str());
  std::printf("tetrahedra %d\n", tri.size());
  std::printf("edge-classes %d\n", rep.edge_class_count);
  std::printf("cusps %d\n", rep.cusp_link_count);
  std::printf("cusp-euler");
  for (int e : rep.cusp_euler) std::printf(" %d", e);
  std::printf("\n");
  std::printf("edge-row-rank %d\n", rep.edge_row_rank);
  std::printf("validation %s\n", rep.pass ? "pass" : "fail");
  for (const auto& f : rep.failures) std::printf("failure %s\n", f.c_str());
  s.payload = {{"name", tri.name},
               {"tetrahedra", tri.size()},
               {"edge_classes", rep.edge_class_count},
               {"cusps", rep.cusp_link_count},
               {"cusp_euler", rep.cusp_euler},
               {"edge_row_rank", rep.edge_row_rank},
               {"pass", rep.pass},
               {"failures", rep.failures}};
  return rep.pass ? kOk : kVerifyFail;
}

int cmd_solve(Session& s, const std::string& file) {
  IdealTriangulation tri;
  GluingSystem sys;
  try {
    tri = load_triangulation(s, file);
    require_valid(tri);
    sys = gluing_system(tri);
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  SolveResult sol;
  try {
    sol = solve(sys, s.solver());
  } catch (const SolveError& e) {
    return fail("solve failed", e, kVerifyFail);
  }
  s.stage("solve");
  std::printf("name %s\n", tri.name.c_str());
  std::printf("tetrahedra %d\n", sys.n);
  std::printf("system-rows %d\n", static_cast<int>(sys.rows.size()));
  std::printf("residual %s\n", s.fmt(sol.residual).c_str());
  std::printf("iterations %d\n", sol.iterations);
  std::printf("restarts %d\n", sol.restarts);
  std::printf("geometric %s\n", sol.geometric ? "true" : "false");
  ordered_json shapes = ordered_json::array();
  for (size_t i = 0; i < sol.assignment.shapes.size(); ++i) {
    const auto& z = sol.assignment.shapes[i];
    std::printf("shape %d %s %s\n", static_cast<int>(i), s.fmt(z.real()).c_str(),
                s.fmt(z.imag()).c_str());
    shapes.push_back({hex_float(z.real()), hex_float(z.imag())});
  }
  s.payload = {{"name", tri.name},
               {"residual", hex_float(sol.residual)},
               {"iterations", sol.iterations},
               {"restarts", sol.restarts},
               {"geometric", sol.geometric},
               {"shapes", shapes}};
  return kOk;
}

// Shared by certify/volume/fill: the certificate detail lines.
void print_certificate_lines(Session& s, const Certificate& cert) {
  std::printf("geometric %s\n", cert.geometric ? "true" : "false");
  std::printf("unique %s\n", cert.unique ? "true" : "false");
  std::printf("boxes %d\n", static_cast<int>(cert.boxes.size()));
  std::printf("subsystem-rows");
  for (int r : cert.subsystem_rows) std::printf(" %d", r);
  std::printf("\n");
}

int cmd_certify(Session& s, const std::string& file) {
  IdealTriangulation tri;
  GluingSystem sys;
  try {
    tri = load_triangulation(s, file);
    require_valid(tri);
    sys = gluing_system(tri);
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  Certificate cert;
  try {
    SolveResult sol = solve(sys, s.solver());
    s.stage("solve");
    cert = krawczyk_certify(sys, sol.assignment);
    s.stage("certify");
  } catch (const std::exception& e) {
    return fail("certification failed", e, kVerifyFail);
  }
  std::printf("%s\n", render_certificate(cert).c_str());
  print_certificate_lines(s, cert);
  if (cert.geometric && cert.unique) {
    Interval enc = cert.volume_enclosure;
    std::printf("volume %s\n", s.fmt(enc.mid()).c_str());
    std::printf("enclosure-low %s\n", s.fmt_lo(enc.lo).c_str());
    std::printf("enclosure-high %s\n", s.fmt_hi(enc.hi).c_str());
  }
  s.payload = ordered_json::parse(serialize_certificate(cert));
  return kOk;
}

int cmd_volume(Session& s, const std::string& file) {
  IdealTriangulation tri;
  GluingSystem sys;
  try {
    tri = load_triangulation(s, file);
    require_valid(tri);
    sys = gluing_system(tri);
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  try {
    SolveResult sol = solve(sys, s.solver());
    s.stage("solve");
    Certificate cert = krawczyk_certify(sys, sol.assignment);
    s.stage("certify");
    if (!(cert.geometric && cert.unique))
      throw CertifyError("no unique geometric solution certified");
    VolumeResult vol = volume(sol.assignment);
    Interval enc = cert.volume_enclosure;
    s.stage("volume");
    std::printf("name %s\n", tri.name.c_str());
    std::printf("volume %s\n", s.fmt(vol.value).c_str());
    std::printf("enclosure-low %s\n", s.fmt_lo(enc.lo).c_str());
    std::printf("enclosure-high %s\n", s.fmt_hi(enc.hi).c_str());
    s.payload = {{"name", tri.name},
                 {"volume", hex_float(vol.value)},
                 {"enclosure", {hex_float(enc.lo), hex_float(enc.hi)}},
                 {"flat_tetrahedra",
                  std::count(vol.low_precision.begin(), vol.low_precision.end(), true)}};
  } catch (const std::exception& e) {
    return fail("volume failed", e, kVerifyFail);
  }
  return kOk;
}

int cmd_fill(Session& s, const std::string& file, const std::string& slope_text) {
  IdealTriangulation tri;
  std::vector<Slope> slopes;
  try {
    tri = load_triangulation(s, file);
    require_valid(tri);
    slopes = parse_slopes(slope_text);
    if (slopes.size() != tri.cusps.size())
      throw SlopeError("slope count " + std::to_string(slopes.size()) +
                       " does not match cusp count " + std::to_string(tri.cusps.size()));
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  FillResult res;
  try {
    res = fill(tri, slopes, s.solver());
    s.stage("fill");
  } catch (const std::exception& e) {
    return fail("fill failed", e, kVerifyFail);
  }
  const Certificate& cert = res.certificate;
  std::printf("name %s\n", tri.name.c_str());
  std::printf("slopes %s\n", join_slopes(slopes).c_str());
  print_certificate_lines(s, cert);
  std::printf("volume %s\n", s.fmt(res.vol.value).c_str());
  s.payload = {{"name", tri.name},
               {"slopes", join_slopes(slopes)},
               {"geometric", cert.geometric},
               {"unique", cert.unique},
               {"volume", hex_float(res.vol.value)}};
  if (cert.geometric && cert.unique) {
    Interval enc = cert.volume_enclosure;
    std::printf("enclosure-low %s\n", s.fmt_lo(enc.lo).c_str());
    std::printf("enclosure-high %s\n", s.fmt_hi(enc.hi).c_str());
    s.payload["enclosure"] = {hex_float(enc.lo), hex_float(enc.hi)};
  }
  return kOk;
}

int cmd_sweep(Session& s, const std::string& file, int cusp, const std::string& family_text,
              const std::string& fixed_text, const std::string& out_path, bool parallel) {
  IdealTriangulation tri;
  std::vector<Slope> family;
  std::vector<Slope> fixed;
  try {
    tri = load_triangulation(s, file);
    require_valid(tri);
    family = parse_family(family_text);
    if (!fixed_text.empty()) fixed = parse_slopes(fixed_text);
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  SweepOptions opts;
  opts.parallel = parallel;
  opts.solver = s.solver();
  SweepResult res;
  try {
    res = sweep(tri, cusp, family, fixed, opts);
    s.stage("sweep");
  } catch (const SlopeError& e) {
    return fail("input error", e, kInputError);
  } catch (const std::exception& e) {
    return fail("sweep failed", e, kVerifyFail);
  }
  int certified = 0, uncertified = 0, failed = 0;
  for (const auto& row : res.rows) {
    if (row.status == SweepStatus::certified_geometric)
      ++certified;
    else if (row.status == SweepStatus::solved_uncertified)
      ++uncertified;
    else
      ++failed;
  }
  try {
    write_file(out_path, sweep_csv(res));
    s.stage("write");
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  std::printf("name %s\n", tri.name.c_str());
  std::printf("cusp %d\n", res.cusp);
  std::printf("family-size %d\n", static_cast<int>(res.rows.size()));
  std::printf("certified %d\n", certified);
  std::printf("solved-uncertified %d\n", uncertified);
  std::printf("failed %d\n", failed);
  std::printf("cusped-volume %s\n", s.fmt(res.cusped_volume).c_str());
  std::printf("out %s\n", out_path.c_str());
  s.payload = {{"name", tri.name},
               {"cusp", res.cusp},
               {"family_size", res.rows.size()},
               {"certified", certified},
               {"solved_uncertified", uncertified},
               {"failed", failed},
               {"cusped_volume", hex_float(res.cusped_volume)},
               {"out", out_path}};
  return certified > 0 ? kOk : kVerifyFail;
}

int cmd_homology(Session& s, const std::string& file, const std::string& meridian) {
  LinkingMatrix lk;
  int component = -1;
  try {
    lk = LinkingMatrix::parse(s.read(file));
    s.stage("parse");
    if (!meridian.empty()) {
      size_t used = 0;
      try {
        component = std::stoi(meridian, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != meridian.size()) {
        component = -1;
        for (int i = 0; i < lk.size(); ++i)
          if (lk.labels[i] == meridian) component = i;
        if (component < 0) throw InputError("unknown component label: " + meridian);
      }
      if (component < 0 || component >= lk.size())
        throw InputError("component index out of range: " + meridian);
    }
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  AbelianGroup h = surgery_homology(lk);
  s.stage("homology");
  std::printf("components %d\n", lk.size());
  std::printf("homology %s\n", h.str().c_str());
  std::printf("homology-sphere %s\n", h.trivial() ? "true" : "false");
  s.payload = {{"components", lk.size()},
               {"homology", h.str()},
               {"homology_sphere", h.trivial()}};
  if (component >= 0) {
    bool ok = meridian_zero_surgery_check(lk, component);
    s.stage("meridian-check");
    std::printf("meridian-component %s\n", lk.labels[component].c_str());
    std::printf("meridian-check %s\n", ok ? "pass" : "fail");
    s.payload["meridian_component"] = lk.labels[component];
    s.payload["meridian_check"] = ok;
    return ok ? kOk : kVerifyFail;
  }
  return h.trivial() ? kOk : kVerifyFail;
}

int cmd_pd2tri(Session& s, const std::string& file, const std::string& out_path) {
  PDCode pd;
  try {
    pd = PDCode::parse(s.read(file));
    s.stage("parse");
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  IdealTriangulation tri;
  try {
    tri = octahedral_triangulation(pd);
    s.stage("build");
  } catch (const std::exception& e) {
    return fail("triangulation failed", e, kVerifyFail);
  }
  try {
    write_file(out_path, tri.serialize());
    s.stage("write");
  } catch (const std::exception& e) {
    return fail("input error", e, kInputError);
  }
  std::printf("name %s\n", tri.name.c_str());
  std::printf("crossings %d\n", pd.crossing_count());
  std::printf("components %d\n", pd.component_count());
  std::printf("tetrahedra %d\n", tri.size());
  std::printf("cusps %d\n", static_cast<int>(tri.cusps.size()));
  std::printf("out %s\n", out_path.c_str());
  s.payload = {{"name", tri.name},
               {"crossings", pd.crossing_count()},
               {"components", pd.component_count()},
               {"tetrahedra", tri.size()},
               {"cusps", tri.cusps.size()},
               {"out", out_path}};
  return kOk;
}

void write_report(const Session& s, int argc, char** argv, int code) {
  if (s.report_path.empty()) return;
  ordered_json rep;
  rep["command"] = ordered_json::array();
  for (int i = 0; i < argc; ++i) rep["command"].push_back(argv[i]);
  rep["inputs"] = s.inputs;
  rep["timings"] = ordered_json::array();
  for (const auto& [name, secs] : s.timings)
    rep["timings"].push_back({{"stage", name}, {"seconds", secs}});
  rep["payload"] = s.payload.is_null() ? ordered_json::object() : s.payload;
  rep["exit"] = code;
  std::ofstream out(s.report_path, std::ios::binary);
  if (out)
    out << rep.dump(1) << "\n";
  else
    std::fprintf(stderr, "cannot write report %s\n", s.report_path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  static const std::set<std::string> known{"validate", "solve",    "certify",  "volume",
                                           "fill",     "sweep",    "homology", "pd2tri"};
  if (argc >= 2 && argv[1][0] != '-' && !known.count(argv[1])) {
    std::fprintf(stderr, "unknown subcommand: %s\n", argv[1]);
    return kUnknownCommand;
  }

  Session session;
  CLI::App app{"certified hyperbolic structures on cusped 3-manifolds"};
  app.require_subcommand(1);
  app.add_option("--seed", session.seed, "solver restart-ladder seed");
  app.add_flag("--hex-floats", session.hex, "print numbers as hexadecimal floats");
  app.add_option("--report", session.report_path, "write a JSON run report");

  std::string file, slopes_text, family_text, fixed_text, out_path, meridian;
  int cusp = 0;
  bool parallel = false;
  int code = kOk;

  auto* validate = app.add_subcommand("validate", "check triangulation structure");
  validate->add_option("file", file, "triangulation file")->required();
  validate->callback([&] { code = cmd_validate(session, file); });

  auto* solve_cmd = app.add_subcommand("solve", "solve the gluing equations");
  solve_cmd->add_option("file", file, "triangulation file")->required();
  solve_cmd->callback([&] { code = cmd_solve(session, file); });

  auto* certify = app.add_subcommand("certify", "certify a solution with interval arithmetic");
  certify->add_option("file", file, "triangulation file")->required();
  certify->callback([&] { code = cmd_certify(session, file); });

  auto* volume_cmd = app.add_subcommand("volume", "certified hyperbolic volume");
  volume_cmd->add_option("file", file, "triangulation file")->required();
  volume_cmd->callback([&] { code = cmd_volume(session, file); });

  auto* fill_cmd = app.add_subcommand("fill", "Dehn fill along given slopes");
  fill_cmd->add_option("file", file, "triangulation file")->required();
  fill_cmd->add_option("--slopes", slopes_text, "comma-separated slopes, one per cusp (p/q or inf)")
      ->required();
  fill_cmd->callback([&] { code = cmd_fill(session, file, slopes_text); });

  auto* sweep_cmd = app.add_subcommand("sweep", "volumes along a family of fillings");
  sweep_cmd->add_option("file", file, "triangulation file")->required();
  sweep_cmd->add_option("--cusp", cusp, "cusp index to fill");
  sweep_cmd->add_option("--family", family_text, "slope range p/q1..p/q2 or comma-separated list")
      ->required();
  sweep_cmd->add_option("--fixed", fixed_text, "slopes held on the other cusps");
  sweep_cmd->add_option("--out", out_path, "CSV output path")->required();
  sweep_cmd->add_flag("--parallel", parallel, "solve family members in parallel");
  sweep_cmd->callback(
      [&] { code = cmd_sweep(session, file, cusp, family_text, fixed_text, out_path, parallel); });

  auto* homology = app.add_subcommand("homology", "surgery homology from a linking matrix");
  homology->add_option("file", file, "linking matrix file")->required();
  homology->add_option("--meridian", meridian, "component (index or label) for the 0-surgery check");
  homology->callback([&] { code = cmd_homology(session, file, meridian); });

  auto* pd2tri = app.add_subcommand("pd2tri", "triangulate a planar-diagram link complement");
  pd2tri->add_option("file", file, "planar diagram file")->required();
  pd2tri->add_option("--out", out_path, "triangulation output path")->required();
  pd2tri->callback([&] { code = cmd_pd2tri(session, file, out_path); });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? kOk : kInputError;
  }
  write_report(session, argc, argv, code);
  return code;
}
