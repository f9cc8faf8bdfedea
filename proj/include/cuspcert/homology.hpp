#pragma once
// Exact integer linear algebra for surgery presentations: Smith normal form
// with unimodular transforms, cokernels as abelian groups, first homology of
// Dehn surgery on framed links, and the meridian 0-surgery check.
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cuspcert {

struct HomologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Exact determinant of a square matrix (fraction-free elimination).
mpz_class exact_determinant(const ZMatrix& a);

struct SmithDecomposition {
  ZMatrix u, d, v;  // u*a*v = d, u and v unimodular, d diagonal with
                    // nonnegative entries in a divisibility chain
};

SmithDecomposition smith_normal_form(const ZMatrix& a);

struct AbelianGroup {
  long long free_rank = 0;
  std::vector<mpz_class> torsion;  // each >= 2, divisibility chain
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
  std::string str() const;  // "0", "Z", "Z/5 (+) Z" (direct sums joined with the circled plus)
};

// Cokernel of the column span: Z^m / im(a) for an m x k matrix.
AbelianGroup cokernel(const ZMatrix& a);

struct LinkingMatrix {
  ZMatrix entries;                  // symmetric; framings on the diagonal
  std::vector<std::string> labels;  // component names (defaulted when absent)
  int size() const { return static_cast<int>(entries.size()); }
  // Structured text: {"size": m, "matrix": m*m row-major integers,
  // "labels": optional}. Unknown fields rejected; symmetry enforced.
  static LinkingMatrix parse(const std::string& text);
};

// First homology of the surgered manifold presented by the linking matrix.
AbelianGroup surgery_homology(const LinkingMatrix& l);

// Append a 0-framed meridian of the chosen component and test whether the
// surgered homology becomes infinite cyclic (free rank 1, no torsion).
bool meridian_zero_surgery_check(const LinkingMatrix& l, int component);

}  // namespace cuspcert
