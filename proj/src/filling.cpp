#include "cuspcert/filling.hpp"

#include <cmath>
#include <cstdio>

#include "cuspcert/format.hpp"

namespace cuspcert {

namespace {

bool all_unfilled(const std::vector<Slope>& slopes) {
  for (const auto& s : slopes)
    if (s.filled()) return false;
  return true;
}

}  // namespace

FillResult fill(const IdealTriangulation& tri, const std::vector<Slope>& slopes,
                const SolveOptions& opts) {
  auto rep = tri.validate();
  if (!rep.pass)
    throw TriangulationError("fill requires a valid triangulation: " + rep.failures.front());
  GluingSystem complete = gluing_system(tri);
  SolveResult base = solve(complete, opts);
  FillResult out;
  if (slopes.empty() || all_unfilled(slopes)) {
    out.assignment = base.assignment;
    out.certificate = krawczyk_certify(complete, out.assignment);
  } else {
    GluingSystem filled = gluing_system(tri, slopes);
    SolveResult sol = solve(filled, base.assignment.shapes, opts);
    out.assignment = sol.assignment;
    out.certificate = krawczyk_certify(filled, out.assignment);
  }
  out.vol = volume(out.assignment);
  return out;
}

const char* sweep_status_name(SweepStatus s) {
  switch (s) {
    case SweepStatus::certified_geometric: return "certified-geometric";
    case SweepStatus::solved_uncertified: return "solved-uncertified";
    case SweepStatus::failed: return "failed";
  }
  return "?";
}

namespace {

// Solve + certify one filled system; seeds with `seed` when given.
SweepRow run_slope(const IdealTriangulation& tri, const std::vector<Slope>& slopes,
                   Slope family_slope, const std::vector<std::complex<double>>* seed,
                   const SolveOptions& opts, std::vector<std::complex<double>>* solution_out) {
  SweepRow row;
  row.slope = family_slope;
  GluingSystem sys = gluing_system(tri, slopes);
  SolveResult sol;
  try {
    sol = seed ? solve(sys, *seed, opts) : solve(sys, opts);
  } catch (const SolveError&) {
    row.status = SweepStatus::failed;
    return row;
  }
  if (solution_out) *solution_out = sol.assignment.shapes;
  row.volume = volume(sol.assignment).value;
  row.status = SweepStatus::solved_uncertified;
  try {
    Certificate cert = krawczyk_certify(sys, sol.assignment);
    if (cert.unique && cert.geometric) {
      row.status = SweepStatus::certified_geometric;
      row.enclosure_width = cert.volume_enclosure.width();
    }
  } catch (const CertifyError&) {
  } catch (const IntervalError&) {
  }
  return row;
}

}  // namespace

SweepResult sweep(const IdealTriangulation& tri, int cusp, const std::vector<Slope>& family,
                  const std::vector<Slope>& fixed, const SweepOptions& opts) {
  int c = static_cast<int>(tri.cusps.size());
  if (cusp < 0 || cusp >= c)
    throw SlopeError("cusp index " + std::to_string(cusp) + " out of range");
  if (family.empty()) throw SlopeError("empty slope family");
  if (!fixed.empty() && static_cast<int>(fixed.size()) != c)
    throw SlopeError("fixed slopes list length does not match cusp count");

  GluingSystem complete = gluing_system(tri);
  SolveResult base = solve(complete, opts.solver);
  SweepResult out;
  out.cusp = cusp;
  out.cusped_volume = volume(base.assignment).value;
  out.rows.resize(family.size());

  std::vector<Slope> slopes = fixed.empty() ? std::vector<Slope>(c, Slope::unfilled()) : fixed;

  if (opts.parallel) {
    int count = static_cast<int>(family.size());
#pragma omp parallel for
    for (int i = 0; i < count; ++i) {
      std::vector<Slope> per = slopes;
      per[cusp] = family[i];
      out.rows[i] = run_slope(tri, per, family[i], nullptr, opts.solver, nullptr);
    }
  } else {
    std::vector<std::complex<double>> seed = base.assignment.shapes;
    for (size_t i = 0; i < family.size(); ++i) {
      std::vector<Slope> per = slopes;
      per[cusp] = family[i];
      std::vector<std::complex<double>> found;
      out.rows[i] = run_slope(tri, per, family[i], &seed, opts.solver, &found);
      if (out.rows[i].status != SweepStatus::failed) seed = found;
    }
  }
  return out;
}

std::string sweep_csv(const SweepResult& s) {
  std::string out = "slope_p,slope_q,status,volume,enclosure_width,delta_to_cusped\n";
  auto num = [](double v) { return sig15(v); };
  for (const auto& row : s.rows) {
    if (row.slope.filled())
      out += std::to_string(row.slope.p()) + "," + std::to_string(row.slope.q());
    else
      out += "inf,inf";
    out += std::string(",") + sweep_status_name(row.status) + ",";
    if (row.status != SweepStatus::failed) out += num(row.volume);
    out += ",";
    if (row.status == SweepStatus::certified_geometric) out += num(row.enclosure_width);
    out += ",";
    if (row.status != SweepStatus::failed) out += num(s.cusped_volume - row.volume);
    out += "\n";
  }
  return out;
}

}  // namespace cuspcert
