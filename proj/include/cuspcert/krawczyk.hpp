#pragma once
// Krawczyk interval-Newton certification of approximate gluing-equation
// solutions: a deterministic square-subsystem choice, an epsilon-inflation
// ladder, outward-rounded residual enclosures over the full system, and
// certificates carrying geometricity/uniqueness flags plus a certified volume.
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspcert/gluing.hpp"
#include "cuspcert/interval.hpp"
#include "cuspcert/solver.hpp"

namespace cuspcert {

struct CertifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Certificate {
  std::vector<ComplexBox> boxes;    // one enclosure per shape
  bool geometric = false;           // every box has Im strictly > 0
  bool unique = false;              // Krawczyk interior containment achieved
  Interval volume_enclosure;        // filled when geometric and unique
  std::string system_digest;
  std::vector<int> subsystem_rows;  // row indices of the certified square subsystem
};

// First n rows independent over Q (in reduced columns), scanning
// completeness/filling rows before edge rows; throws if rank < n.
std::vector<int> square_subsystem(const GluingSystem& sys);

// Enclosure of every row of the system over the boxes; certification requires
// 0 in each. Throws if a box meets 0, 1, or a logarithm branch cut.
std::vector<ComplexBox> interval_residual(const GluingSystem& sys,
                                          const std::vector<ComplexBox>& boxes);

// Certify an approximate solution (residual must be < 1e-8). On success the
// boxes each contain the unique square-subsystem solution in their interior,
// and 0 lies in every full-system residual row.
Certificate krawczyk_certify(const GluingSystem& sys, const ShapeAssignment& approx);

// Structured serialization with exact hexadecimal-float bounds.
std::string serialize_certificate(const Certificate& cert);
// Decorated-decimal rendering: "(True,\n [re? + im?*I, ...])".
std::string render_certificate(const Certificate& cert);

}  // namespace cuspcert
