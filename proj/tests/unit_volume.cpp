#include <cmath>
#include <complex>
#include <random>

#include "cuspcert/bloch_wigner.hpp"
#include "cuspcert/gluing.hpp"
#include "cuspcert/krawczyk.hpp"
#include "cuspcert/solver.hpp"
#include "cuspcert/volume.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cuspcert;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::complex<double> random_upper(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-2.0, 3.0);
  std::uniform_real_distribution<double> im(0.05, 2.5);
  return {re(rng), im(rng)};
}

}  // namespace

TEST_CASE("known dilogarithm values") {
  // regular ideal tetrahedron: half the two-tetrahedron census volume
  double reg = bloch_wigner(std::exp(std::complex<double>(0.0, kPi / 3.0)));
  CHECK(std::fabs(reg - 1.0149416064096536) < 1e-14);
  // D(i) is Catalan's constant
  CHECK(std::fabs(bloch_wigner(std::complex<double>(0.0, 1.0)) - 0.9159655941772190) < 1e-14);
}

TEST_CASE("six-fold symmetry identities") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 1000; ++k) {
    auto z = random_upper(rng);
    double d = bloch_wigner(z);
    CHECK(std::fabs(bloch_wigner(std::conj(z)) + d) < 1e-12);
    CHECK(std::fabs(bloch_wigner(1.0 - 1.0 / z) - d) < 1e-12);
    CHECK(std::fabs(bloch_wigner(1.0 / (1.0 - z)) - d) < 1e-12);
    CHECK(std::fabs(bloch_wigner(1.0 / z) + d) < 1e-12);
  }
}

TEST_CASE("real arguments give exactly zero") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int k = 0; k < 200; ++k) {
    double x = dist(rng);
    if (std::fabs(x) < 1e-9 || std::fabs(x - 1.0) < 1e-9) continue;
    CHECK(bloch_wigner(std::complex<double>(x, 0.0)) == 0.0);
  }
  CHECK(bloch_wigner(std::complex<double>(2.0, 0.0)) == 0.0);
  CHECK(bloch_wigner(std::complex<double>(-1.0, 0.0)) == 0.0);
  CHECK_THROWS_AS(bloch_wigner(std::complex<double>(1.0, 0.0)), DilogError);
  CHECK_THROWS_AS(bloch_wigner(std::complex<double>(0.0, 0.0)), DilogError);
}

TEST_CASE("enclosure flavor contains the floating value") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    auto z = random_upper(rng);
    Interval enc = bloch_wigner(box_around(z, 1e-8));
    CHECK(enc.contains(bloch_wigner(z)));
    CHECK(enc.width() < 1e-5);
  }
}

TEST_CASE("volume of the two-tetrahedron census manifold") {
  auto sol = solve(gluing_system(load_tri("figure_eight.tri")));
  auto vol = volume(sol.assignment);
  CHECK(std::fabs(vol.value - 2.0298832128193072) < 1e-12);
  REQUIRE(vol.per_tetrahedron.size() == 2);
  double sum = 0.0;
  for (size_t i = 0; i < vol.per_tetrahedron.size(); ++i) {
    CHECK(vol.per_tetrahedron[i] > 0.0);
    CHECK_FALSE(vol.low_precision[i]);
    sum += vol.per_tetrahedron[i];
  }
  CHECK(vol.value == sum);
}

TEST_CASE("volume is additive over disjoint unions") {
  auto sol = solve(gluing_system(load_tri("whitehead.tri")));
  auto once = volume(sol.assignment);
  ShapeAssignment doubled;
  doubled.shapes = sol.assignment.shapes;
  doubled.shapes.insert(doubled.shapes.end(), sol.assignment.shapes.begin(),
                        sol.assignment.shapes.end());
  auto twice = volume(doubled);
  CHECK(std::fabs(twice.value - 2.0 * once.value) < 1e-12);
}

TEST_CASE("near-real shapes are flagged low precision") {
  ShapeAssignment a;
  a.shapes = {{0.5, 1e-7}, {0.5, 0.8}};
  auto vol = volume(a);
  CHECK(vol.low_precision[0]);
  CHECK_FALSE(vol.low_precision[1]);
}

TEST_CASE("floating volume lies inside each certified enclosure") {
  for (const char* file : {"figure_eight.tri", "whitehead.tri", "borromean.tri"}) {
    CAPTURE(file);
    auto sys = gluing_system(load_tri(file));
    auto sol = solve(sys);
    auto cert = krawczyk_certify(sys, sol.assignment);
    REQUIRE(cert.geometric);
    REQUIRE(cert.unique);
    CHECK(cert.volume_enclosure.contains(volume(sol.assignment).value));
    // recomputation from the boxes agrees
    Interval again = volume_enclosure(cert);
    CHECK_NOTHROW(iintersect(again, cert.volume_enclosure));
  }
}
