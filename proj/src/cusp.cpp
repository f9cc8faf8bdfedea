#include "cuspcert/cusp.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "cuspcert/perm4.hpp"

namespace cuspcert {

const std::array<int, 3>& even_corner_cycle(int v) {
  // (v, a, b, c) is even for each row.
  static const std::array<std::array<int, 3>, 4> kCycles{{
      {1, 2, 3},  // v = 0
      {0, 3, 2},  // v = 1
      {0, 1, 3},  // v = 2
      {0, 2, 1},  // v = 3
  }};
  if (v < 0 || v > 3) throw std::out_of_range("vertex label out of range");
  return kCycles[v];
}

CuspSurface::CuspSurface(const IdealTriangulation& tri, int cusp_index)
    : tri_(&tri) {
  auto vcl = tri.vertex_classes();
  if (cusp_index < 0 || cusp_index >= static_cast<int>(vcl.size()))
    throw TriangulationError("cusp index out of range: " +
                             std::to_string(cusp_index));
  tris_ = vcl[cusp_index];
  std::sort(tris_.begin(), tris_.end());
  for (int i = 0; i < static_cast<int>(tris_.size()); ++i)
    tri_idx_[tris_[i]] = i;

  for (const auto& [t, v] : tris_) {
    for (int f = 0; f < 4; ++f) {
      if (f == v) continue;
      const FaceGluing& g = tri.glue[t][f];
      mate_[{t, v, f}] = CuspSide{g.to, g.perm[v], g.perm[f]};
    }
  }
  for (const auto& [s, s2] : mate_) side_class_[s] = std::min(s, s2);
  {
    std::set<CuspSide> reps;
    for (const auto& [s, rep] : side_class_) reps.insert(rep);
    classes_.assign(reps.begin(), reps.end());
  }
  // Orient each class from its smaller to its larger corner label on the
  // representative side; the mate carries the orientation through the perm.
  for (const CuspSide& c : classes_) {
    int a = -1, b = -1;
    for (int x = 0; x < 4; ++x) {
      if (x == c.vertex || x == c.face) continue;
      (a < 0 ? a : b) = x;
    }
    orient_[c] = {a, b};
    CuspSide s2 = mate_.at(c);
    const Perm4& p = tri.glue[c.tet][c.face].perm;
    if (s2 != c) orient_[s2] = {p[a], p[b]};
  }
}

CuspSide CuspSurface::mate(const CuspSide& s) const {
  auto it = mate_.find(s);
  if (it == mate_.end()) throw TriangulationError("side not on this cusp");
  return it->second;
}

CuspSide CuspSurface::side_class(const CuspSide& s) const {
  auto it = side_class_.find(s);
  if (it == side_class_.end()) throw TriangulationError("side not on this cusp");
  return it->second;
}

namespace {

// One traversal of a side class: leave `from` through `exit`, arrive in `to`
// through `enter`.
struct Crossing {
  int from;
  CuspSide exit;
  int to;
  CuspSide enter;
  bool operator==(const Crossing&) const = default;
};

}  // namespace

std::vector<CuspWalk> CuspSurface::fundamental_cycles() const {
  // Adjacency per triangle: (other triangle, side here, side there).
  struct Arc {
    int other;
    CuspSide here;
    CuspSide there;
  };
  std::vector<std::vector<Arc>> adj(tris_.size());
  for (const CuspSide& c : classes_) {
    CuspSide e1 = c, e2 = mate_.at(c);
    int i1 = tri_idx_.at({e1.tet, e1.vertex});
    int i2 = tri_idx_.at({e2.tet, e2.vertex});
    adj[i1].push_back({i2, e1, e2});
    if (e2 != e1) adj[i2].push_back({i1, e2, e1});
  }

  // Breadth-first spanning tree; parent[y] records how y hangs below its
  // parent: cross `here` (a side of y) onto `par` (a side of the parent).
  struct Parent {
    int node = -1;
    CuspSide here;
    CuspSide par;
  };
  const int root = 0;
  std::vector<Parent> parent(tris_.size());
  std::vector<char> reached(tris_.size(), 0);
  reached[root] = 1;
  std::set<CuspSide> tree_classes;
  std::deque<int> dq{root};
  while (!dq.empty()) {
    int x = dq.front();
    dq.pop_front();
    for (const Arc& arc : adj[x]) {
      if (reached[arc.other]) continue;
      reached[arc.other] = 1;
      parent[arc.other] = {x, arc.there, arc.here};
      tree_classes.insert(side_class_.at(arc.here));
      dq.push_back(arc.other);
    }
  }

  auto up_crossings = [&](int x) {
    std::vector<Crossing> out;
    while (x != root) {
      const Parent& p = parent[x];
      out.push_back({x, p.here, p.node, p.par});
      x = p.node;
    }
    return out;
  };

  std::vector<CuspWalk> walks;
  for (const CuspSide& c : classes_) {
    if (tree_classes.count(c)) continue;
    CuspSide e1 = c, e2 = mate_.at(c);
    int a = tri_idx_.at({e1.tet, e1.vertex});
    int b = tri_idx_.at({e2.tet, e2.vertex});
    // Cyclic path: a -(cross c)-> b -(tree, up)-> lca <-(tree, up)- a.
    std::vector<Crossing> ua = up_crossings(a);
    std::vector<Crossing> ub = up_crossings(b);
    while (!ua.empty() && !ub.empty() && ua.back() == ub.back()) {
      ua.pop_back();
      ub.pop_back();
    }
    std::vector<Crossing> crossings;
    crossings.push_back({a, e1, b, e2});
    for (const Crossing& cr : ub) crossings.push_back(cr);
    for (auto it = ua.rbegin(); it != ua.rend(); ++it)
      crossings.push_back({it->to, it->enter, it->from, it->exit});
    // Steps: in the triangle crossing i lands in, enter through crossing i's
    // entry side and exit through crossing i+1's exit side.
    const int m = static_cast<int>(crossings.size());
    CuspWalk steps;
    bool ok = true;
    for (int i = 0; i < m; ++i) {
      const Crossing& cur = crossings[i];
      const Crossing& nxt = crossings[(i + 1) % m];
      if (cur.to != nxt.from) {
        ok = false;
        break;
      }
      steps.push_back({cur.enter, nxt.exit});
    }
    if (ok) walks.push_back(std::move(steps));
  }
  return walks;
}

std::vector<long long> CuspSurface::walk_row(const CuspWalk& walk) const {
  std::vector<long long> row(3 * tri_->size(), 0);
  for (const CuspStep& step : walk) {
    const auto& [t, v, f_in] = step.enter;
    const auto& [t2, v2, f_out] = step.exit;
    if (t != t2 || v != v2 || f_in == f_out)
      throw TriangulationError("walk step sides not in one triangle");
    int w = 6 - v - f_in - f_out;
    const auto& cyc = even_corner_cycle(v);
    // Corner cut with the corner to the left of travel counts -1, to the
    // right +1; the left cases are the cyclic rotations of reversed cyc.
    const std::array<std::array<int, 3>, 3> left{{
        {cyc[2], cyc[1], cyc[0]},
        {cyc[0], cyc[2], cyc[1]},
        {cyc[1], cyc[0], cyc[2]},
    }};
    std::array<int, 3> key{f_in, w, f_out};
    long long eps = 1;
    for (const auto& tripod : left)
      if (key == tripod) eps = -1;
    row[3 * t + edge_slot(std::min(v, w), std::max(v, w))] += eps;
  }
  return row;
}

double CuspSurface::boundary_coord(const CuspSide& emb, double u) const {
  const auto& cyc = even_corner_cycle(emb.vertex);
  double base;
  std::pair<int, int> fwd;
  if (emb.face == cyc[2]) {
    base = 0.0;
    fwd = {cyc[0], cyc[1]};
  } else if (emb.face == cyc[0]) {
    base = 1.0;
    fwd = {cyc[1], cyc[2]};
  } else if (emb.face == cyc[1]) {
    base = 2.0;
    fwd = {cyc[2], cyc[0]};
  } else {
    throw TriangulationError("side face equals its triangle vertex");
  }
  auto [a, b] = orient_.at(emb);
  if (std::pair<int, int>{a, b} == fwd) return base + u;
  if (std::pair<int, int>{b, a} == fwd) return base + (1.0 - u);
  throw TriangulationError("orientation labels mismatch");
}

int CuspSurface::intersection(const CuspWalk& walk1,
                              const CuspWalk& walk2) const {
  // Spread multiple passes through one side class to distinct parameters
  // u = (k+1)/(count+1), counting passes of both walks together.
  std::map<CuspSide, int> cnt;
  std::vector<int> k1, k2;
  for (const CuspStep& s : walk1) k1.push_back(cnt[side_class_.at(s.enter)]++);
  for (const CuspStep& s : walk2) k2.push_back(cnt[side_class_.at(s.enter)]++);

  struct Passage {
    int tri;
    double in;
    double out;
  };
  auto passages = [&](const CuspWalk& walk, const std::vector<int>& ks) {
    const int m = static_cast<int>(walk.size());
    std::vector<double> u(m);
    for (int i = 0; i < m; ++i)
      u[i] = static_cast<double>(ks[i] + 1) /
             static_cast<double>(cnt.at(side_class_.at(walk[i].enter)) + 1);
    std::vector<Passage> out;
    for (int i = 0; i < m; ++i) {
      const CuspStep& step = walk[i];
      out.push_back({tri_idx_.at({step.enter.tet, step.enter.vertex}),
                     boundary_coord(step.enter, u[i]),
                     boundary_coord(step.exit, u[(i + 1) % m])});
    }
    return out;
  };
  std::vector<Passage> p1 = passages(walk1, k1);
  std::vector<Passage> p2 = passages(walk2, k2);

  int total = 0;
  for (const Passage& a : p1) {
    for (const Passage& b : p2) {
      if (a.tri != b.tri) continue;
      if (a.in == a.out || a.in == b.in || a.in == b.out || a.out == b.in ||
          a.out == b.out || b.in == b.out)
        continue;
      // Circular interval (a.in, a.out) on the boundary coordinate [0, 3).
      auto between = [&](double x) {
        if (a.in < a.out) return a.in < x && x < a.out;
        return x > a.in || x < a.out;
      };
      if (between(b.in) == between(b.out)) continue;
      total += between(b.in) ? 1 : -1;
    }
  }
  return total;
}

}  // namespace cuspcert
