#include "cuspcert/homology.hpp"

#include "json.hpp"

namespace cuspcert {

namespace {

void check_rectangular(const ZMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a.front().size())
      throw HomologyError("ragged matrix");
}

void add_multiple_row(ZMatrix& m, int dst, int src, const mpz_class& f) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}

void add_multiple_col(ZMatrix& m, int dst, int src, const mpz_class& f) {
  for (size_t i = 0; i < m.size(); ++i) m[i][dst] += f * m[i][src];
}

ZMatrix identity(int n) {
  ZMatrix id(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

mpz_class exact_determinant(const ZMatrix& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  check_rectangular(a);
  if (static_cast<int>(a.front().size()) != n)
    throw HomologyError("determinant of a non-square matrix");
  ZMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (int t = 0; t + 1 < n; ++t) {
    if (m[t][t] == 0) {
      int p = -1;
      for (int i = t + 1; i < n; ++i)
        if (m[i][t] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[t], m[p]);
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j) {
        mpz_class num = m[t][t] * m[i][j] - m[i][t] * m[t][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[t][t];
  }
  return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

SmithDecomposition smith_normal_form(const ZMatrix& a) {
  SmithDecomposition s;
  int m = static_cast<int>(a.size());
  int k = m == 0 ? 0 : static_cast<int>(a.front().size());
  if (m > 0) check_rectangular(a);
  s.d = a;
  s.u = identity(m);
  s.v = identity(k);

  for (int t = 0; t < std::min(m, k); ++t) {
    for (;;) {
      // smallest-magnitude nonzero pivot in the remaining block
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < k; ++j) {
          if (s.d[i][j] == 0) continue;
          if (pi < 0 ||
              mpz_cmpabs(s.d[i][j].get_mpz_t(), s.d[pi][pj].get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // block exhausted
      if (pi != t) {
        std::swap(s.d[pi], s.d[t]);
        std::swap(s.u[pi], s.u[t]);
      }
      if (pj != t) {
        for (int i = 0; i < m; ++i) std::swap(s.d[i][pj], s.d[i][t]);
        for (int i = 0; i < k; ++i) std::swap(s.v[i][pj], s.v[i][t]);
      }
      bool residue = false;
      for (int i = t + 1; i < m; ++i) {
        if (s.d[i][t] == 0) continue;
        mpz_class q = s.d[i][t] / s.d[t][t];  // truncating
        if (q != 0) {
          add_multiple_row(s.d, i, t, -q);
          add_multiple_row(s.u, i, t, -q);
        }
        if (s.d[i][t] != 0) residue = true;
      }
      for (int j = t + 1; j < k; ++j) {
        if (s.d[t][j] == 0) continue;
        mpz_class q = s.d[t][j] / s.d[t][t];
        if (q != 0) {
          add_multiple_col(s.d, j, t, -q);
          add_multiple_col(s.v, j, t, -q);
        }
        if (s.d[t][j] != 0) residue = true;
      }
      if (residue) continue;  // smaller entries appeared; re-pivot
      // divisibility: the pivot must divide everything that remains
      bool fixed = false;
      for (int i = t + 1; i < m && !fixed; ++i)
        for (int j = t + 1; j < k && !fixed; ++j)
          if (s.d[i][j] % s.d[t][t] != 0) {
            add_multiple_row(s.d, t, i, 1);
            add_multiple_row(s.u, t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (s.d[t][t] < 0) {
      for (auto& x : s.d[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
    if (s.d[t][t] == 0) break;  // block exhausted: the rest is zero
  }
  return s;
}

AbelianGroup cokernel(const ZMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  AbelianGroup g;
  int m = static_cast<int>(a.size());
  int k = m == 0 ? 0 : static_cast<int>(a.front().size());
  int rank = 0;
  for (int t = 0; t < std::min(m, k); ++t) {
    if (s.d[t][t] == 0) continue;
    ++rank;
    if (s.d[t][t] >= 2) g.torsion.push_back(s.d[t][t]);
  }
  g.free_rank = m - rank;
  return g;
}

std::string AbelianGroup::str() const {
  std::vector<std::string> parts;
  for (const auto& d : torsion) parts.push_back("Z/" + d.get_str());
  for (long long i = 0; i < free_rank; ++i) parts.push_back("Z");
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

LinkingMatrix LinkingMatrix::parse(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw HomologyError(std::string("malformed linking matrix: ") + e.what());
  }
  if (!doc.is_object()) throw HomologyError("malformed linking matrix: not an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "size" && key != "matrix" && key != "labels")
      throw HomologyError("unknown field: " + key);
  }
  if (!doc.contains("size") || !doc["size"].is_number_integer())
    throw HomologyError("malformed linking matrix: size must be an integer");
  long long m = doc["size"].get<long long>();
  if (m < 1) throw HomologyError("linking matrix size must be >= 1");
  if (!doc.contains("matrix") || !doc["matrix"].is_array() ||
      static_cast<long long>(doc["matrix"].size()) != m * m)
    throw HomologyError("matrix must hold size*size row-major integers");

  LinkingMatrix l;
  l.entries.assign(m, std::vector<mpz_class>(m));
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j) {
      const auto& v = doc["matrix"][i * m + j];
      if (!v.is_number_integer())
        throw HomologyError("matrix entries must be integers");
      l.entries[i][j] = static_cast<long>(v.get<long long>());
    }
  for (long long i = 0; i < m; ++i)
    for (long long j = i + 1; j < m; ++j)
      if (l.entries[i][j] != l.entries[j][i])
        throw HomologyError("linking matrix must be symmetric");

  if (doc.contains("labels")) {
    const auto& lj = doc["labels"];
    if (!lj.is_array() || static_cast<long long>(lj.size()) != m)
      throw HomologyError("labels must list one name per component");
    for (const auto& x : lj) {
      if (!x.is_string()) throw HomologyError("labels must be text");
      l.labels.push_back(x.get<std::string>());
    }
  } else {
    for (long long i = 0; i < m; ++i) l.labels.push_back("K" + std::to_string(i + 1));
  }
  return l;
}

AbelianGroup surgery_homology(const LinkingMatrix& l) { return cokernel(l.entries); }

bool meridian_zero_surgery_check(const LinkingMatrix& l, int component) {
  int m = l.size();
  if (component < 0 || component >= m)
    throw HomologyError("component index out of range");
  ZMatrix ext(m + 1, std::vector<mpz_class>(m + 1, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ext[i][j] = l.entries[i][j];
  ext[component][m] = 1;
  ext[m][component] = 1;
  AbelianGroup g = cokernel(ext);
  return g.free_rank == 1 && g.torsion.empty();
}

}  // namespace cuspcert
