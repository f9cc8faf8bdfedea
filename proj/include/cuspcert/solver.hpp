#pragma once
// Damped Newton least-squares solver for logarithmic gluing systems in the
// shape variables, with degeneration guards and a bounded random-restart
// ladder. Deterministic for fixed (system, initial guess, seed).
#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cuspcert/gluing.hpp"

namespace cuspcert {

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The three shape logarithms (log z, log 1/(1-z), log(1 - 1/z)), principal
// branches. For Im z > 0 they sum to pi*i.
std::array<std::complex<double>, 3> log_triple(std::complex<double> z);

struct ShapeAssignment {
  std::vector<std::complex<double>> shapes;
  // per-tetrahedron principal-branch logarithm triples
  std::vector<std::array<std::complex<double>, 3>> log_branches() const;
};

struct SolveOptions {
  double tol = 1e-12;            // infinity-norm convergence threshold
  int max_iterations = 50;       // per attempt
  int retries = 8;               // random re-initializations after the default guess
  unsigned long long seed = 0;   // retry-ladder generator seed
};

struct SolveResult {
  ShapeAssignment assignment;
  double residual = 0.0;
  int iterations = 0;                    // of the successful attempt
  int restarts = 0;                      // attempts discarded before success
  std::vector<double> residual_history;  // per-iteration infinity norms
  bool geometric = false;                // all Im z_j > 0
};

// One row evaluation minus its target nu*pi*i.
std::complex<double> row_value(const std::vector<long long>& row, long long target,
                               const std::vector<std::complex<double>>& shapes);

// Infinity norm of all row values; throws on logarithm poles (z in {0,1}).
double residual(const GluingSystem& sys, const std::vector<std::complex<double>>& shapes);

// Solve from the default guess exp(i*pi/3) with the restart ladder.
SolveResult solve(const GluingSystem& sys, const SolveOptions& opts = {});
// Solve from a caller-supplied guess, falling back to the default ladder.
SolveResult solve(const GluingSystem& sys, const std::vector<std::complex<double>>& init,
                  const SolveOptions& opts = {});

}  // namespace cuspcert
