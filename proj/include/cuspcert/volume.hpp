#pragma once
// Hyperbolic volume of a shape assignment: per-tetrahedron Bloch-Wigner
// contributions with flat-tetrahedron flags, and certified volume enclosures
// recomputed from certificate boxes.
#include <stdexcept>
#include <vector>

#include "cuspcert/krawczyk.hpp"
#include "cuspcert/solver.hpp"

namespace cuspcert {

struct VolumeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VolumeResult {
  double value = 0.0;
  std::vector<double> per_tetrahedron;
  // |Im z| <= 1e-6: flat tetrahedron, contribution numerically delicate
  std::vector<bool> low_precision;
};

VolumeResult volume(const ShapeAssignment& shapes);

// Interval sum of the enclosure-flavor Bloch-Wigner over the certificate
// boxes; requires a unique geometric certificate.
Interval volume_enclosure(const Certificate& cert);

}  // namespace cuspcert
