#include "cuspcert/diagram.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "cuspcert/cusp.hpp"
#include "cuspcert/exact.hpp"
#include "cuspcert/perm4.hpp"

namespace cuspcert {

namespace {

// Arc label -> its two endpoints (crossing, port), in crossing-major order.
std::map<int, std::vector<std::pair<int, int>>> segment_ends(
    const std::vector<std::array<int, 4>>& crossings) {
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c)
    for (int p = 0; p < 4; ++p) ends[crossings[c][p]].push_back({c, p});
  return ends;
}

// Trace link components: strands pass straight through each crossing
// (port 0 <-> 2 under, 1 <-> 3 over).
std::vector<std::vector<int>> trace_components(
    const std::vector<std::array<int, 4>>& crossings,
    const std::map<int, std::vector<std::pair<int, int>>>& ends) {
  std::set<int> seen;
  std::vector<std::vector<int>> comps;
  for (const auto& [a0, _] : ends) {
    if (seen.count(a0)) continue;
    std::vector<int> comp;
    int a = a0;
    auto [c, p] = ends.at(a)[0];
    while (!seen.count(a)) {
      seen.insert(a);
      comp.push_back(a);
      int q = (p + 2) % 4;
      a = crossings[c][q];
      const auto& e = ends.at(a);
      std::tie(c, p) = e[0] == std::pair<int, int>{c, q} ? e[1] : e[0];
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

PDCode PDCode::parse(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == '/' || ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<std::string> toks;
  for (std::string tok; in >> tok;) toks.push_back(tok);

  PDCode pd;
  size_t i = 0;
  while (i < toks.size()) {
    if (toks[i] != "X" && toks[i] != "x")
      throw DiagramError("expected X entry, got '" + toks[i] + "'");
    if (i + 4 >= toks.size())
      throw DiagramError("crossing needs 4 arc labels");
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) {
      const std::string& t = toks[i + 1 + k];
      size_t used = 0;
      int v;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
        throw DiagramError("bad arc label '" + t + "'");
      }
      if (used != t.size()) throw DiagramError("bad arc label '" + t + "'");
      x[k] = v;
    }
    pd.crossings.push_back(x);
    i += 5;
  }

  if (pd.crossings.size() < 2)
    throw DiagramError("diagram needs at least 2 crossings");
  for (const auto& x : pd.crossings)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (x[a] == x[b])
          throw DiagramError("repeated arc label " + std::to_string(x[a]) +
                             " at one crossing");
  std::map<int, int> mult;
  for (const auto& x : pd.crossings)
    for (int a : x) ++mult[a];
  for (const auto& [a, k] : mult)
    if (k != 2)
      throw DiagramError("arc label " + std::to_string(a) + " appears " +
                         std::to_string(k) + " times (want 2)");

  // Connectivity over crossings joined by shared arcs.
  {
    const int V = pd.crossing_count();
    std::vector<int> uf(V);
    for (int v = 0; v < V; ++v) uf[v] = v;
    auto find = [&](int v) {
      while (uf[v] != v) v = uf[v] = uf[uf[v]];
      return v;
    };
    auto ends = segment_ends(pd.crossings);
    for (const auto& [a, e] : ends) uf[find(e[0].first)] = find(e[1].first);
    for (int v = 1; v < V; ++v)
      if (find(v) != find(0)) throw DiagramError("disconnected diagram");
    pd.components = trace_components(pd.crossings, ends);
  }
  return pd;
}

std::vector<std::vector<std::pair<int, int>>> pd_regions(const PDCode& pd) {
  auto ends = segment_ends(pd.crossings);
  std::set<std::pair<int, int>> todo;
  for (int c = 0; c < pd.crossing_count(); ++c)
    for (int i = 0; i < 4; ++i) todo.insert({c, i});
  std::vector<std::vector<std::pair<int, int>>> regions;
  while (!todo.empty()) {
    auto [c, i] = *todo.begin();
    std::vector<std::pair<int, int>> reg;
    // Walk: depart port i, follow the arc, arrive into port p', continue at
    // the clockwise-adjacent quadrant (c', p'-1).
    while (todo.count({c, i})) {
      todo.erase({c, i});
      reg.push_back({c, i});
      int a = pd.crossings[c][i];
      const auto& e = ends.at(a);
      auto [c2, p2] = e[0] == std::pair<int, int>{c, i} ? e[1] : e[0];
      c = c2;
      i = (p2 + 3) % 4;
    }
    regions.push_back(std::move(reg));
  }
  return regions;
}

std::vector<int> crossing_signs(const PDCode& pd) {
  std::map<int, int> succ;
  for (const auto& comp : pd.components)
    for (size_t i = 0; i < comp.size(); ++i)
      succ[comp[i]] = comp[(i + 1) % comp.size()];
  std::vector<int> signs;
  for (const auto& x : pd.crossings) {
    int b = x[1], d = x[3];
    if (succ.count(d) && succ.at(d) == b)
      signs.push_back(1);
    else if (succ.count(b) && succ.at(b) == d)
      signs.push_back(-1);
    else
      throw DiagramError("cannot orient over-strand at a crossing");
  }
  return signs;
}

std::vector<int> region_colors(
    const PDCode& pd,
    const std::vector<std::vector<std::pair<int, int>>>& regions) {
  (void)pd;
  std::vector<int> cols;
  for (const auto& reg : regions) {
    std::set<int> ps;
    for (const auto& [c, a] : reg) ps.insert(a & 1);
    if (ps.size() != 1) throw DiagramError("inconsistent checkerboard parity");
    cols.push_back(*ps.begin());
  }
  return cols;
}

namespace {

// Capping rule for the octahedral decomposition. Tetrahedron (c, i) sits in
// the octahedron of crossing c between ports i and i+1, vertices 0 = top,
// 1 = bottom, 2/3 = the two strand germs. Around each region, a horizontal
// face leaving one corner glues onto a horizontal face entering the next:
// the face pick (0 = floor, 1 = ceiling) follows the region's checkerboard
// color, the vertex map the two crossing signs and the color.
int source_face(int col) { return col; }
int target_face(int col) { return 1 - col; }

const Perm4& capping_perm(int s1, int s2, int col) {
  static const std::array<Perm4, 8> kTable{{
      {1, 3, 0, 2},  // + + color 0
      {3, 0, 1, 2},  // + + color 1
      {1, 0, 2, 3},  // + - color 0
      {3, 0, 1, 2},  // + - color 1
      {1, 3, 0, 2},  // - + color 0
      {1, 0, 2, 3},  // - + color 1
      {1, 3, 0, 2},  // - - color 0
      {3, 0, 1, 2},  // - - color 1
  }};
  return kTable[(s1 > 0 ? 0 : 4) + (s2 > 0 ? 0 : 2) + col];
}

struct GluingTable {
  std::vector<std::array<FaceGluing, 4>> glue;

  explicit GluingTable(int n) : glue(n) {}

  void add(int t1, int f1, int t2, int f2, const Perm4& p) {
    if (glue[t1][f1].to >= 0 || glue[t2][f2].to >= 0)
      throw DiagramError("face gluing clash while capping octahedra");
    glue[t1][f1] = {t2, p};
    glue[t2][f2] = {t1, perm_inverse(p)};
  }
};

}  // namespace

IdealTriangulation octahedral_triangulation(const PDCode& pd) {
  const int V = pd.crossing_count();
  const int n = 4 * V;
  auto regions = pd_regions(pd);
  auto signs = crossing_signs(pd);
  auto colors = region_colors(pd, regions);

  GluingTable table(n);
  auto tet = [](int c, int i) { return 4 * c + ((i % 4) + 4) % 4; };

  // Internal octahedron gluings around the vertical axis.
  for (int c = 0; c < V; ++c)
    for (int i = 0; i < 4; ++i)
      table.add(tet(c, i), 2, tet(c, i + 1), 3, Perm4{0, 1, 3, 2});

  // Cap the upper and lower balls region by region.
  for (size_t ri = 0; ri < regions.size(); ++ri) {
    const auto& reg = regions[ri];
    const int k = static_cast<int>(reg.size());
    const int col = colors[ri];
    for (int j = 0; j < k; ++j) {
      auto [c1, a1] = reg[j];
      auto [c2, a2] = reg[(j + 1) % k];
      table.add(tet(c1, a1), source_face(col), tet(c2, a2), target_face(col),
                capping_perm(signs[c1], signs[c2], col));
    }
  }

  IdealTriangulation tri;
  tri.glue = std::move(table.glue);
  for (const auto& faces : tri.glue)
    for (const FaceGluing& g : faces)
      if (g.to < 0) throw DiagramError("unglued face after capping");

  std::string sig;
  for (const auto& x : pd.crossings) {
    if (!sig.empty()) sig += " / ";
    sig += "X";
    for (int a : x) sig += " " + std::to_string(a);
  }
  tri.name = "pdlink-" + fnv1a64_hex(sig).substr(0, 8);

  tri.cusps = cusp_basis(tri);
  ValidationReport report = tri.validate();
  if (!report.pass) {
    std::string msg = "octahedral triangulation invalid:";
    for (const std::string& f : report.failures) msg += " " + f;
    throw DiagramError(msg);
  }
  return tri;
}

namespace {

// A strictly positive solution of the linearized angle equations (angles sum
// to pi in each tetrahedron, 2*pi around each edge class), found by
// least-squares plus alternating projection. Such a solution makes the
// winding count of any closed cusp walk computable as a near-integer.
Eigen::VectorXd angle_structure(const IdealTriangulation& tri) {
  const int n = tri.size();
  auto erows = tri.edge_rows();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * n, 3 * n);
  Eigen::VectorXd b(2 * n);
  for (int t = 0; t < n; ++t) {
    A(t, 3 * t) = A(t, 3 * t + 1) = A(t, 3 * t + 2) = 1.0;
    b(t) = M_PI;
  }
  for (int e = 0; e < static_cast<int>(erows.size()); ++e) {
    for (int jc = 0; jc < 3 * n; ++jc)
      A(n + e, jc) = static_cast<double>(erows[e][jc]);
    b(n + e) = 2.0 * M_PI;
  }
  auto cod = A.completeOrthogonalDecomposition();
  Eigen::VectorXd theta = cod.solve(b);
  for (int it = 0; it < 200; ++it) {
    if (theta.minCoeff() > 1e-3) break;
    theta = theta.cwiseMax(5e-3);
    Eigen::VectorXd corr = cod.solve(A * theta - b);
    theta -= corr;
  }
  return theta;
}

// Winding count of a closed walk against the angle structure, in turns.
double walk_turns(const std::vector<long long>& row,
                  const Eigen::VectorXd& theta) {
  double tot = 0.0;
  for (int i = 0; i < static_cast<int>(row.size()); ++i)
    tot += static_cast<double>(row[i]) * theta(i);
  return tot / (2.0 * M_PI);
}

}  // namespace

std::vector<PeripheralPair> cusp_basis(const IdealTriangulation& tri) {
  auto chis = tri.cusp_euler();
  for (size_t c = 0; c < chis.size(); ++c)
    if (chis[c] != 0)
      throw DiagramError("cusp " + std::to_string(c) + " link is not a torus");

  auto erows = tri.edge_rows();
  if (erows.empty()) throw DiagramError("empty triangulation");
  const std::vector<long long>& erow0 = erows[0];
  Eigen::VectorXd theta = angle_structure(tri);

  std::vector<PeripheralPair> out;
  for (int ci = 0; ci < static_cast<int>(chis.size()); ++ci) {
    CuspSurface surf(tri, ci);
    auto cycles = surf.fundamental_cycles();
    std::vector<std::vector<long long>> rows, norm;
    std::vector<long long> ks;
    for (const CuspWalk& w : cycles) {
      rows.push_back(surf.walk_row(w));
      ks.push_back(std::llround(walk_turns(rows.back(), theta)));
    }
    // Subtracting k copies of an edge row cancels the walk's winding, so the
    // normalized row has vanishing log-holonomy at complete solutions.
    for (size_t i = 0; i < rows.size(); ++i) {
      std::vector<long long> r(rows[i]);
      for (size_t jc = 0; jc < r.size(); ++jc) r[jc] -= ks[i] * erow0[jc];
      norm.push_back(std::move(r));
    }
    // Shortest pair of cycles meeting exactly once, ordered to intersect +1.
    bool found = false;
    size_t best_len = 0, bi = 0, bj = 0;
    int bsign = 1;
    for (size_t i = 0; i < cycles.size(); ++i) {
      for (size_t j = i + 1; j < cycles.size(); ++j) {
        int ii = surf.intersection(cycles[i], cycles[j]);
        if (ii != 1 && ii != -1) continue;
        size_t len = cycles[i].size() + cycles[j].size();
        if (!found || len < best_len) {
          found = true;
          best_len = len;
          bi = i;
          bj = j;
          bsign = ii;
        }
      }
    }
    if (!found)
      throw DiagramError("no generating cycle pair found on cusp " +
                         std::to_string(ci));
    PeripheralPair pair;
    pair.meridian = bsign == 1 ? norm[bi] : norm[bj];
    pair.longitude = bsign == 1 ? norm[bj] : norm[bi];
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace cuspcert
