#include "cuspcert/gluing.hpp"

#include <numeric>

#include "cuspcert/exact.hpp"

namespace cuspcert {

Slope Slope::of(long long p, long long q) {
  if (p == 0 && q == 0) throw SlopeError("slope (0,0) is not a curve");
  long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
  if (g != 1) throw SlopeError("slope coefficients must be coprime: " +
                               std::to_string(p) + "/" + std::to_string(q));
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  Slope s;
  s.filled_ = true;
  s.p_ = p;
  s.q_ = q;
  return s;
}

Slope Slope::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "inf" || t == "Inf" || t == "INF" || t == "∞") return unfilled();
  auto slash = t.find('/');
  if (slash == std::string::npos)
    throw SlopeError("slope must be 'inf' or 'p/q': " + text);
  try {
    size_t used1 = 0, used2 = 0;
    long long p = std::stoll(t.substr(0, slash), &used1);
    long long q = std::stoll(t.substr(slash + 1), &used2);
    if (used1 != slash || used2 != t.size() - slash - 1)
      throw SlopeError("slope must be 'inf' or 'p/q': " + text);
    return of(p, q);
  } catch (const SlopeError&) {
    throw;
  } catch (const std::exception&) {
    throw SlopeError("slope must be 'inf' or 'p/q': " + text);
  }
}

std::string Slope::str() const {
  if (!filled_) return "inf";
  return std::to_string(p_) + "/" + std::to_string(q_);
}

const char* row_kind_name(RowKind k) {
  switch (k) {
    case RowKind::edge: return "edge";
    case RowKind::meridian: return "meridian";
    case RowKind::longitude: return "longitude";
    case RowKind::filling: return "filling";
  }
  return "?";
}

std::string GluingSystem::digest() const {
  std::string text = std::to_string(n);
  for (size_t i = 0; i < rows.size(); ++i) {
    text += ';';
    text += row_kind_name(kinds[i]);
    text += ':';
    text += std::to_string(targets[i]);
    text += ':';
    for (long long x : rows[i]) {
      text += std::to_string(x);
      text += ',';
    }
  }
  return fnv1a64_hex(text);
}

GluingSystem gluing_system(const IdealTriangulation& tri,
                           const std::vector<Slope>& slopes) {
  if (!slopes.empty() && slopes.size() != tri.cusps.size())
    throw SlopeError("slopes list length " + std::to_string(slopes.size()) +
                     " != cusp count " + std::to_string(tri.cusps.size()));
  GluingSystem sys;
  sys.n = tri.size();
  for (auto& row : tri.edge_rows()) {
    sys.rows.push_back(std::move(row));
    sys.targets.push_back(2);
    sys.kinds.push_back(RowKind::edge);
  }
  for (size_t c = 0; c < tri.cusps.size(); ++c) {
    const auto& pp = tri.cusps[c];
    Slope s = slopes.empty() ? Slope::unfilled() : slopes[c];
    if (!s.filled()) {
      sys.rows.push_back(pp.meridian);
      sys.targets.push_back(0);
      sys.kinds.push_back(RowKind::meridian);
      sys.rows.push_back(pp.longitude);
      sys.targets.push_back(0);
      sys.kinds.push_back(RowKind::longitude);
    } else {
      std::vector<long long> row(3 * sys.n, 0);
      for (size_t j = 0; j < row.size(); ++j)
        row[j] = s.p() * pp.meridian[j] + s.q() * pp.longitude[j];
      sys.rows.push_back(std::move(row));
      sys.targets.push_back(2);
      sys.kinds.push_back(RowKind::filling);
    }
  }
  return sys;
}

}  // namespace cuspcert
