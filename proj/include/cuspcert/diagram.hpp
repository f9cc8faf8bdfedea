#pragma once
// Link diagrams to ideal triangulations: parse planar-diagram (PD) codes,
// build the octahedral decomposition of the link complement (one ideal
// octahedron per crossing, split into four tetrahedra around the vertical
// axis), and compute peripheral curve rows from cusp-torus homology.
#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cuspcert/triangulation.hpp"

namespace cuspcert {

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A link diagram as crossing 4-tuples of strand labels, read counterclockwise
// from the incoming under-strand: port 0 = under-in, 1 and 3 = over,
// 2 = under-out.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  // Link components as arc labels in travel order.
  std::vector<std::vector<int>> components;

  // Accepts entries `X a b c d` separated by newlines, `/`, or commas.
  // Rejects labels not appearing exactly twice, repeated labels at one
  // crossing, disconnected diagrams, and fewer than 2 crossings.
  static PDCode parse(const std::string& text);

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int component_count() const { return static_cast<int>(components.size()); }
};

// Complementary regions of the diagram; each is the cyclic list of its
// corners (crossing, quadrant), quadrant i lying between ports i and i+1.
std::vector<std::vector<std::pair<int, int>>> pd_regions(const PDCode& pd);

// +1 where the over-strand enters at port 3, -1 where it enters at port 1.
std::vector<int> crossing_signs(const PDCode& pd);

// Checkerboard color (0/1) of each region = parity of its quadrant indices;
// throws if a region mixes parities.
std::vector<int> region_colors(
    const PDCode& pd, const std::vector<std::vector<std::pair<int, int>>>& regions);

// Ideal triangulation of the link complement with 4 tetrahedra per crossing,
// validated, with peripheral rows from cusp_basis stored per cusp. The name
// is derived from the crossing list, so equal diagrams build identical files.
IdealTriangulation octahedral_triangulation(const PDCode& pd);

// For each cusp, two closed curves on the cusp torus generating its first
// homology (intersection number +1), holonomy-normalized so that vanishing
// log-holonomy of both rows expresses completeness, returned as
// meridian/longitude rows of gluing-system coefficients.
std::vector<PeripheralPair> cusp_basis(const IdealTriangulation& tri);

}  // namespace cuspcert
