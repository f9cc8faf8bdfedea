#include <cmath>
#include <complex>

#include "cuspcert/gluing.hpp"
#include "cuspcert/solver.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cuspcert;

TEST_CASE("two-tetrahedron fixture solves to the regular shape") {
  auto sys = gluing_system(load_tri("figure_eight.tri"));
  auto sol = solve(sys);
  CHECK(sol.geometric);
  CHECK(sol.residual < 1e-12);
  REQUIRE(sol.assignment.shapes.size() == 2);
  for (const auto& z : sol.assignment.shapes) {
    CHECK(std::fabs(z.real() - 0.5) < 1e-9);
    CHECK(std::fabs(z.imag() - std::sqrt(3.0) / 2.0) < 1e-9);
  }
}

TEST_CASE("all fixtures reach geometric solutions") {
  for (const char* file : {"figure_eight.tri", "whitehead.tri", "borromean.tri"}) {
    CAPTURE(file);
    auto sys = gluing_system(load_tri(file));
    auto sol = solve(sys);
    CHECK(sol.geometric);
    CHECK(sol.residual < 1e-12);
    for (const auto& z : sol.assignment.shapes) CHECK(z.imag() > 0.0);
  }
}

TEST_CASE("solver output is bitwise deterministic") {
  auto sys = gluing_system(load_tri("borromean.tri"));
  auto a = solve(sys);
  auto b = solve(sys);
  REQUIRE(a.assignment.shapes.size() == b.assignment.shapes.size());
  for (size_t i = 0; i < a.assignment.shapes.size(); ++i) {
    CHECK(a.assignment.shapes[i].real() == b.assignment.shapes[i].real());
    CHECK(a.assignment.shapes[i].imag() == b.assignment.shapes[i].imag());
  }
  CHECK(a.residual == b.residual);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("log triple sums to pi*i on geometric solutions") {
  for (const char* file : {"whitehead.tri", "borromean.tri"}) {
    CAPTURE(file);
    auto sol = solve(gluing_system(load_tri(file)));
    REQUIRE(sol.geometric);
    for (const auto& z : sol.assignment.shapes) {
      auto t = log_triple(z);
      std::complex<double> sum = t[0] + t[1] + t[2];
      CHECK(std::abs(sum - std::complex<double>(0.0, std::acos(-1.0))) < 1e-12);
    }
  }
}

TEST_CASE("convergence is quadratic near the solution") {
  // perturb the known solution so the history has a contracting segment
  auto sys = gluing_system(load_tri("whitehead.tri"));
  auto base = solve(sys);
  auto init = base.assignment.shapes;
  for (auto& z : init) z += std::complex<double>(3e-3, -2e-3);
  auto sol = solve(sys, init);
  const auto& hist = sol.residual_history;
  REQUIRE(hist.size() >= 2);
  bool saw_small = false;
  for (size_t k = 0; k + 1 < hist.size(); ++k) {
    if (hist[k] < 1e-3 && hist[k] > 1e-14) {
      saw_small = true;
      CHECK(hist[k + 1] <= 100.0 * hist[k] * hist[k] + 1e-15);
    }
  }
  CHECK(saw_small);
}

TEST_CASE("an unsatisfiable row exhausts the retry ladder") {
  auto sys = gluing_system(load_tri("figure_eight.tri"));
  sys.rows.push_back(std::vector<long long>(3 * sys.n, 0));
  sys.targets.push_back(2);  // demands 0 = 2*pi*i
  sys.kinds.push_back(RowKind::edge);
  CHECK_THROWS_AS(solve(sys), SolveError);
}

TEST_CASE("residual rejects degenerate shapes") {
  auto sys = gluing_system(load_tri("figure_eight.tri"));
  CHECK_THROWS_AS(residual(sys, {std::complex<double>(0.0, 0.0), std::complex<double>(0.5, 0.5)}),
                  SolveError);
  CHECK_THROWS_AS(residual(sys, {std::complex<double>(1.0, 0.0), std::complex<double>(0.5, 0.5)}),
                  SolveError);
}

TEST_CASE("seeded ladders differ only when the default guess fails") {
  auto sys = gluing_system(load_tri("whitehead.tri"));
  SolveOptions a, b;
  a.seed = 0;
  b.seed = 42;
  auto ra = solve(sys, a);
  auto rb = solve(sys, b);
  // default guess converges, so the seed is never consulted
  CHECK(ra.restarts == 0);
  CHECK(rb.restarts == 0);
  for (size_t i = 0; i < ra.assignment.shapes.size(); ++i)
    CHECK(ra.assignment.shapes[i] == rb.assignment.shapes[i]);
}
