#pragma once
// Cusp cross-sections: the link of an ideal vertex class is a triangulated
// surface (a torus for cusped hyperbolic manifolds). This module builds that
// surface, finds closed walks generating its first homology, converts walks
// into integer gluing-system rows, and computes signed intersection numbers.
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "cuspcert/triangulation.hpp"

namespace cuspcert {

// A side of a cusp-link triangle. Triangle (tet, vertex) is the link of ideal
// vertex `vertex` in tetrahedron `tet`; its side on face `face` (face !=
// vertex) joins the two corners at vertices outside {vertex, face}.
struct CuspSide {
  int tet = -1;
  int vertex = -1;
  int face = -1;
  auto operator<=>(const CuspSide&) const = default;
};

// One step of a closed walk: enter and exit sides of the same triangle.
struct CuspStep {
  CuspSide enter;
  CuspSide exit;
};

using CuspWalk = std::vector<CuspStep>;

// Corner order (a, b, c) of {0..3} \ {v} that is counterclockwise in the
// oriented link triangle at vertex v, i.e. (v, a, b, c) is an even
// permutation.
const std::array<int, 3>& even_corner_cycle(int v);

class CuspSurface {
 public:
  CuspSurface(const IdealTriangulation& tri, int cusp_index);

  // Triangles as sorted (tet, vertex) pairs.
  const std::vector<std::pair<int, int>>& triangles() const { return tris_; }

  // The side identified with s across the face gluing.
  CuspSide mate(const CuspSide& s) const;
  // Canonical representative (lexicographic min of s and its mate).
  CuspSide side_class(const CuspSide& s) const;

  // Closed walks generating the homology of the surface: one walk per side
  // class outside a breadth-first spanning tree of the triangle adjacency
  // graph (a torus yields two).
  std::vector<CuspWalk> fundamental_cycles() const;

  // Integer row of 3n shape-slot coefficients: each step cuts the corner at
  // w = 6 - v - f_in - f_out and adds +/-1 in the slot of edge {v, w}.
  std::vector<long long> walk_row(const CuspWalk& walk) const;

  // Signed homological intersection number of two closed walks, computed by
  // pushing the walks to distinct normal arcs and counting crossings.
  int intersection(const CuspWalk& walk1, const CuspWalk& walk2) const;

 private:
  // Point at parameter u along the side class of emb, in the boundary
  // coordinate [0, 3) of emb's triangle.
  double boundary_coord(const CuspSide& emb, double u) const;

  const IdealTriangulation* tri_;
  std::vector<std::pair<int, int>> tris_;
  std::map<std::pair<int, int>, int> tri_idx_;
  std::map<CuspSide, CuspSide> mate_;
  std::map<CuspSide, CuspSide> side_class_;
  std::vector<CuspSide> classes_;
  std::map<CuspSide, std::pair<int, int>> orient_;
};

}  // namespace cuspcert
