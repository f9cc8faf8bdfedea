#pragma once
// Ideal triangulations of cusped orientable 3-manifolds: the document format,
// structural validation, edge/vertex classes, cusp-link Euler characteristics,
// and the integer edge rows of the logarithmic gluing equations.
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuspcert/perm4.hpp"

namespace cuspcert {

struct TriangulationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FaceGluing {
  int to = -1;
  Perm4 perm = kIdentityPerm;
  bool operator==(const FaceGluing&) const = default;
};

struct PeripheralPair {
  std::vector<long long> meridian;   // 3n coefficients
  std::vector<long long> longitude;  // 3n coefficients
};

// Edge {a,b} (a < b) of tetrahedron tet; its shape slot is edge_slot(a,b).
struct EdgeIncidence {
  int tet = 0;
  int a = 0;
  int b = 0;
};

struct ValidationReport {
  bool pass = false;
  int edge_class_count = 0;
  int cusp_link_count = 0;      // ideal vertex classes
  std::vector<int> cusp_euler;  // chi per vertex class
  int edge_row_rank = 0;        // exact rank over Q in reduced columns
  std::vector<std::string> failures;
};

class IdealTriangulation {
 public:
  std::string name;
  std::vector<std::array<FaceGluing, 4>> glue;  // [tet][face]
  std::vector<PeripheralPair> cusps;            // one record per cusp

  int size() const { return static_cast<int>(glue.size()); }

  static IdealTriangulation parse(const std::string& text);
  std::string serialize() const;

  bool involutive() const;
  bool orientable() const;  // all gluing permutations odd

  // Edge classes sorted by smallest incidence; incidences sorted within each.
  std::vector<std::vector<EdgeIncidence>> edge_classes() const;
  // Ideal vertex classes as sorted (tet, vertex) lists, sorted by smallest.
  std::vector<std::vector<std::pair<int, int>>> vertex_classes() const;
  // Euler characteristic of each vertex-class link surface.
  std::vector<int> cusp_euler() const;
  // n integer rows of 3n coefficients (each edge-class incidence adds 1 in its slot).
  std::vector<std::vector<long long>> edge_rows() const;

  ValidationReport validate() const;
};

}  // namespace cuspcert
