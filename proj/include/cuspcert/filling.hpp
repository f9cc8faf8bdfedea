#pragma once
// Dehn filling: certified filled structures and slope-family sweeps with
// continuation seeding, demonstrating monotone volume convergence to the
// cusped volume from below.
#include <limits>
#include <string>
#include <vector>

#include "cuspcert/gluing.hpp"
#include "cuspcert/krawczyk.hpp"
#include "cuspcert/solver.hpp"
#include "cuspcert/triangulation.hpp"
#include "cuspcert/volume.hpp"

namespace cuspcert {

struct FillResult {
  ShapeAssignment assignment;
  Certificate certificate;
  VolumeResult vol;
};

// Build the filled system, solve it seeded by the complete solution, certify,
// and compute the volume. All slopes unfilled reproduces the complete pipeline.
FillResult fill(const IdealTriangulation& tri, const std::vector<Slope>& slopes,
                const SolveOptions& opts = {});

enum class SweepStatus { certified_geometric, solved_uncertified, failed };
const char* sweep_status_name(SweepStatus s);

struct SweepRow {
  Slope slope;
  SweepStatus status = SweepStatus::failed;
  double volume = std::numeric_limits<double>::quiet_NaN();           // absent iff failed
  double enclosure_width = std::numeric_limits<double>::quiet_NaN();  // certified rows only
};

struct SweepResult {
  int cusp = 0;
  std::vector<SweepRow> rows;     // one per family slope, input order
  double cusped_volume = 0.0;     // complete-structure volume for comparison
};

struct SweepOptions {
  bool parallel = false;  // concurrent rows; disables continuation seeding
  SolveOptions solver;
};

// Fill the chosen cusp along each family slope (other cusps follow `fixed`,
// default all unfilled). Per-slope failures are recorded, not fatal.
SweepResult sweep(const IdealTriangulation& tri, int cusp, const std::vector<Slope>& family,
                  const std::vector<Slope>& fixed = {}, const SweepOptions& opts = {});

// Header: slope_p,slope_q,status,volume,enclosure_width,delta_to_cusped
std::string sweep_csv(const SweepResult& s);

}  // namespace cuspcert
