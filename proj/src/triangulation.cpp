#include "cuspcert/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cuspcert/exact.hpp"
#include "json.hpp"

namespace cuspcert {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

// The six vertex pairs of a tetrahedron in lexicographic order.
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int pair_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int i = 0; i < 6; ++i)
    if (kPairs[i][0] == a && kPairs[i][1] == b) return i;
  return -1;
}

long long json_int(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer())
    throw TriangulationError(std::string("malformed document: ") + what + " must be an integer");
  return v.get<long long>();
}

std::vector<long long> json_row(const nlohmann::json& v, size_t len, const char* what) {
  if (!v.is_array() || v.size() != len)
    throw TriangulationError(std::string("peripheral row of wrong length: ") + what);
  std::vector<long long> out;
  out.reserve(len);
  for (const auto& x : v) out.push_back(json_int(x, what));
  return out;
}

}  // namespace

IdealTriangulation IdealTriangulation::parse(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw TriangulationError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object())
    throw TriangulationError("malformed document: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "name" && key != "tetrahedra" && key != "gluings" && key != "cusps")
      throw TriangulationError("unknown field: " + key);
  }
  for (const char* req : {"name", "tetrahedra", "gluings", "cusps"})
    if (!doc.contains(req))
      throw TriangulationError(std::string("malformed document: missing field ") + req);

  IdealTriangulation tri;
  if (!doc["name"].is_string())
    throw TriangulationError("malformed document: name must be text");
  tri.name = doc["name"].get<std::string>();

  long long n = json_int(doc["tetrahedra"], "tetrahedra");
  if (n < 1) throw TriangulationError("tetrahedra must be >= 1");

  const auto& gl = doc["gluings"];
  if (!gl.is_array() || static_cast<long long>(gl.size()) != n)
    throw TriangulationError("malformed document: gluings must be an n-entry array");
  tri.glue.resize(n);
  for (long long t = 0; t < n; ++t) {
    const auto& faces = gl[t];
    if (!faces.is_array() || faces.size() != 4)
      throw TriangulationError("malformed document: each tetrahedron needs 4 face records");
    for (int f = 0; f < 4; ++f) {
      const auto& rec = faces[f];
      if (!rec.is_object())
        throw TriangulationError("malformed document: face record must be an object");
      for (const auto& [key, value] : rec.items()) {
        (void)value;
        if (key != "to" && key != "perm")
          throw TriangulationError("unknown field in face record: " + key);
      }
      if (!rec.contains("to") || !rec.contains("perm"))
        throw TriangulationError("malformed document: face record needs to and perm");
      long long to = json_int(rec["to"], "to");
      if (to < 0 || to >= n)
        throw TriangulationError("face target out of range: " + std::to_string(to));
      const auto& pj = rec["perm"];
      if (!pj.is_array() || pj.size() != 4)
        throw TriangulationError("malformed document: perm must have 4 entries");
      Perm4 p{};
      for (int i = 0; i < 4; ++i) p[i] = static_cast<int>(json_int(pj[i], "perm"));
      if (!perm_valid(p))
        throw TriangulationError("malformed document: perm is not a permutation of 0..3");
      tri.glue[t][f] = FaceGluing{static_cast<int>(to), p};
    }
  }
  if (!tri.involutive()) throw TriangulationError("non-involutive gluing");

  const auto& cj = doc["cusps"];
  if (!cj.is_array())
    throw TriangulationError("malformed document: cusps must be an array");
  for (const auto& rec : cj) {
    if (!rec.is_object())
      throw TriangulationError("malformed document: cusp record must be an object");
    for (const auto& [key, value] : rec.items()) {
      (void)value;
      if (key != "meridian" && key != "longitude")
        throw TriangulationError("unknown field in cusp record: " + key);
    }
    if (!rec.contains("meridian") || !rec.contains("longitude"))
      throw TriangulationError("malformed document: cusp record needs meridian and longitude");
    PeripheralPair pp;
    pp.meridian = json_row(rec["meridian"], 3 * n, "meridian");
    pp.longitude = json_row(rec["longitude"], 3 * n, "longitude");
    tri.cusps.push_back(std::move(pp));
  }
  return tri;
}

std::string IdealTriangulation::serialize() const {
  nlohmann::json doc;
  doc["name"] = name;
  doc["tetrahedra"] = size();
  nlohmann::json gl = nlohmann::json::array();
  for (const auto& faces : glue) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& fg : faces) {
      nlohmann::json rec;
      rec["to"] = fg.to;
      rec["perm"] = fg.perm;
      row.push_back(std::move(rec));
    }
    gl.push_back(std::move(row));
  }
  doc["gluings"] = std::move(gl);
  nlohmann::json cj = nlohmann::json::array();
  for (const auto& c : cusps) {
    nlohmann::json rec;
    rec["meridian"] = c.meridian;
    rec["longitude"] = c.longitude;
    cj.push_back(std::move(rec));
  }
  doc["cusps"] = std::move(cj);
  return doc.dump(1) + "\n";
}

bool IdealTriangulation::involutive() const {
  int n = size();
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& fg = glue[t][f];
      if (fg.to < 0 || fg.to >= n) return false;
      int f2 = fg.perm[f];
      const FaceGluing& back = glue[fg.to][f2];
      if (back.to != t) return false;
      if (back.perm != perm_inverse(fg.perm)) return false;
    }
  }
  return true;
}

bool IdealTriangulation::orientable() const {
  for (const auto& faces : glue)
    for (const auto& fg : faces)
      if (perm_parity(fg.perm) != 1) return false;
  return true;
}

std::vector<std::vector<EdgeIncidence>> IdealTriangulation::edge_classes() const {
  int n = size();
  UnionFind uf(6 * n);
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& fg = glue[t][f];
      for (int e = 0; e < 6; ++e) {
        int a = kPairs[e][0], b = kPairs[e][1];
        if (a == f || b == f) continue;
        int e2 = pair_index(fg.perm[a], fg.perm[b]);
        uf.unite(t * 6 + e, fg.to * 6 + e2);
      }
    }
  }
  std::map<int, std::vector<EdgeIncidence>> groups;
  for (int t = 0; t < n; ++t)
    for (int e = 0; e < 6; ++e)
      groups[uf.find(t * 6 + e)].push_back(EdgeIncidence{t, kPairs[e][0], kPairs[e][1]});
  std::vector<std::vector<EdgeIncidence>> out;
  out.reserve(groups.size());
  for (auto& [rep, inc] : groups) {
    (void)rep;
    std::sort(inc.begin(), inc.end(), [](const EdgeIncidence& x, const EdgeIncidence& y) {
      return std::tie(x.tet, x.a, x.b) < std::tie(y.tet, y.a, y.b);
    });
    out.push_back(std::move(inc));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<EdgeIncidence>& x, const std::vector<EdgeIncidence>& y) {
              return std::tie(x[0].tet, x[0].a, x[0].b) < std::tie(y[0].tet, y[0].a, y[0].b);
            });
  return out;
}

std::vector<std::vector<std::pair<int, int>>> IdealTriangulation::vertex_classes() const {
  int n = size();
  UnionFind uf(4 * n);
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& fg = glue[t][f];
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        uf.unite(t * 4 + v, fg.to * 4 + fg.perm[v]);
      }
    }
  }
  std::map<int, std::vector<std::pair<int, int>>> groups;
  for (int t = 0; t < n; ++t)
    for (int v = 0; v < 4; ++v)
      groups[uf.find(t * 4 + v)].push_back({t, v});
  std::vector<std::vector<std::pair<int, int>>> out;
  out.reserve(groups.size());
  for (auto& [rep, mem] : groups) {
    (void)rep;
    std::sort(mem.begin(), mem.end());
    out.push_back(std::move(mem));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return out;
}

std::vector<int> IdealTriangulation::cusp_euler() const {
  int n = size();
  auto vcl = vertex_classes();
  std::vector<int> vclass_of(4 * n, -1);
  for (size_t i = 0; i < vcl.size(); ++i)
    for (auto [t, v] : vcl[i]) vclass_of[t * 4 + v] = static_cast<int>(i);

  // link-surface vertices: tetrahedron corners (t, v, w), v != w
  auto corner_id = [n](int t, int v, int w) { return (t * 4 + v) * 4 + w; };
  UnionFind corners(16 * n);
  // link-surface edges: side embeddings (t, v, f), v != f
  auto side_id = corner_id;
  UnionFind sides(16 * n);
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& fg = glue[t][f];
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        sides.unite(side_id(t, v, f), side_id(fg.to, fg.perm[v], fg.perm[f]));
        for (int w = 0; w < 4; ++w) {
          if (w == v || w == f) continue;
          corners.unite(corner_id(t, v, w), corner_id(fg.to, fg.perm[v], fg.perm[w]));
        }
      }
    }
  }
  std::vector<int> V(vcl.size(), 0), E(vcl.size(), 0), F(vcl.size(), 0);
  std::vector<char> corner_seen(16 * n, 0), side_seen(16 * n, 0);
  for (int t = 0; t < n; ++t) {
    for (int v = 0; v < 4; ++v) {
      int cl = vclass_of[t * 4 + v];
      ++F[cl];
      for (int w = 0; w < 4; ++w) {
        if (w == v) continue;
        int c = corners.find(corner_id(t, v, w));
        if (!corner_seen[c]) {
          corner_seen[c] = 1;
          ++V[cl];
        }
        int s = sides.find(side_id(t, v, w));
        if (!side_seen[s]) {
          side_seen[s] = 1;
          ++E[cl];
        }
      }
    }
  }
  std::vector<int> chi(vcl.size());
  for (size_t i = 0; i < vcl.size(); ++i) chi[i] = V[i] - E[i] + F[i];
  return chi;
}

std::vector<std::vector<long long>> IdealTriangulation::edge_rows() const {
  int n = size();
  auto classes = edge_classes();
  std::vector<std::vector<long long>> rows;
  rows.reserve(classes.size());
  for (const auto& cls : classes) {
    std::vector<long long> row(3 * n, 0);
    for (const auto& inc : cls) row[3 * inc.tet + edge_slot(inc.a, inc.b)] += 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

ValidationReport IdealTriangulation::validate() const {
  ValidationReport rep;
  int n = size();
  if (n == 0) {
    rep.failures.push_back("empty triangulation");
    return rep;
  }
  if (!involutive()) {
    rep.failures.push_back("involution violated: some face is not glued to a unique partner");
    return rep;
  }
  if (!orientable())
    rep.failures.push_back("orientability violated: gluing permutation with even parity");

  auto ecl = edge_classes();
  rep.edge_class_count = static_cast<int>(ecl.size());
  if (rep.edge_class_count != n)
    rep.failures.push_back("edge classes " + std::to_string(rep.edge_class_count) +
                           " != tetrahedra " + std::to_string(n));

  auto chi = cusp_euler();
  rep.cusp_link_count = static_cast<int>(chi.size());
  rep.cusp_euler = chi;
  for (size_t i = 0; i < chi.size(); ++i)
    if (chi[i] != 0)
      rep.failures.push_back("cusp link " + std::to_string(i) +
                             " has Euler characteristic " + std::to_string(chi[i]));

  if (static_cast<int>(cusps.size()) != rep.cusp_link_count)
    rep.failures.push_back("cusp records " + std::to_string(cusps.size()) +
                           " != cusp links " + std::to_string(rep.cusp_link_count));
  for (size_t i = 0; i < cusps.size(); ++i)
    if (cusps[i].meridian.size() != static_cast<size_t>(3 * n) ||
        cusps[i].longitude.size() != static_cast<size_t>(3 * n))
      rep.failures.push_back("cusp " + std::to_string(i) + " peripheral row of wrong length");

  if (rep.edge_class_count == n && rep.failures.empty()) {
    rep.edge_row_rank = rational_rank(reduced_columns(edge_rows()));
    int c = rep.cusp_link_count;
    if (rep.edge_row_rank != n - c)
      rep.failures.push_back("edge-row rank " + std::to_string(rep.edge_row_rank) +
                             " != n - cusps = " + std::to_string(n - c));
  }
  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace cuspcert
