#pragma once
// Logarithmic gluing-equation systems: integer coefficient rows with pi*i
// multiple targets (edge / completeness / filling kinds), Dehn-filling
// slopes, and system digests.
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspcert/triangulation.hpp"

namespace cuspcert {

struct SlopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dehn filling coefficient: the unfilled symbol, or a coprime pair normalized
// so p > 0, or p = 0 with q = 1.
class Slope {
 public:
  Slope() = default;  // unfilled
  static Slope unfilled() { return Slope(); }
  static Slope of(long long p, long long q);        // throws on (0,0) or gcd > 1
  static Slope parse(const std::string& text);      // "inf" or "p/q"
  bool filled() const { return filled_; }
  long long p() const { return p_; }
  long long q() const { return q_; }
  bool operator==(const Slope&) const = default;
  std::string str() const;  // "inf" or "p/q"

 private:
  bool filled_ = false;
  long long p_ = 0, q_ = 0;
};

enum class RowKind { edge, meridian, longitude, filling };

const char* row_kind_name(RowKind k);

struct GluingSystem {
  int n = 0;                                 // tetrahedron count (3n columns)
  std::vector<std::vector<long long>> rows;  // integer coefficients
  std::vector<long long> targets;            // nu, meaning target nu*pi*i
  std::vector<RowKind> kinds;
  std::string digest() const;                // content digest, 16 hex chars
};

// Edge rows (nu = 2); per unfilled cusp its meridian and longitude rows
// (nu = 0); per cusp filled along p/q the single row p*meridian + q*longitude
// (nu = 2). Empty slopes list = all cusps unfilled.
GluingSystem gluing_system(const IdealTriangulation& tri,
                           const std::vector<Slope>& slopes = {});

}  // namespace cuspcert
