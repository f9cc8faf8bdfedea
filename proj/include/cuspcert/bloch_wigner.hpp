#pragma once
// Bloch-Wigner dilogarithm D(z) = Im Li2(z) + arg(1-z) log|z|, the hyperbolic
// volume of the ideal tetrahedron of shape z. Evaluation reduces z through its
// six-fold symmetry orbit to the best-converging representative, then sums a
// Bernoulli series in u = -log(1-z). Floating and enclosure flavors; the
// enclosure carries a rigorous truncation remainder.
#include <complex>
#include <stdexcept>

#include "cuspcert/interval.hpp"

namespace cuspcert {

struct DilogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exactly 0 for real z; throws on z in {0, 1}.
double bloch_wigner(std::complex<double> z);

// Rigorous enclosure of D over the box; throws if the box meets {0, 1} or a
// branch cut.
Interval bloch_wigner(const ComplexBox& z);

}  // namespace cuspcert
