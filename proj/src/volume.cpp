#include "cuspcert/volume.hpp"

#include "cuspcert/bloch_wigner.hpp"

namespace cuspcert {

VolumeResult volume(const ShapeAssignment& shapes) {
  VolumeResult out;
  out.per_tetrahedron.reserve(shapes.shapes.size());
  for (auto z : shapes.shapes) {
    double d = bloch_wigner(z);
    out.per_tetrahedron.push_back(d);
    out.low_precision.push_back(std::abs(z.imag()) <= 1e-6);
    out.value += d;
  }
  return out;
}

Interval volume_enclosure(const Certificate& cert) {
  if (!cert.unique || !cert.geometric)
    throw VolumeError("volume enclosure requires a unique geometric certificate");
  Interval vol(0.0);
  for (const auto& b : cert.boxes) vol = vol + bloch_wigner(b);
  return vol;
}

}  // namespace cuspcert
