#include "cuspcert/exact.hpp"
#include "cuspcert/gluing.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cuspcert;

TEST_CASE("complete system of the two-tetrahedron fixture") {
  auto tri = load_tri("figure_eight.tri");
  auto sys = gluing_system(tri);
  CHECK(sys.n == 2);
  REQUIRE(sys.rows.size() == 4);  // 2 edge rows + meridian + longitude
  int edge = 0, mer = 0, lon = 0;
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    CHECK(sys.rows[i].size() == 6);
    switch (sys.kinds[i]) {
      case RowKind::edge:
        ++edge;
        CHECK(sys.targets[i] == 2);
        break;
      case RowKind::meridian:
        ++mer;
        CHECK(sys.targets[i] == 0);
        break;
      case RowKind::longitude:
        ++lon;
        CHECK(sys.targets[i] == 0);
        break;
      case RowKind::filling: CHECK(false); break;
    }
  }
  CHECK(edge == 2);
  CHECK(mer == 1);
  CHECK(lon == 1);
}

TEST_CASE("filled rows combine the peripheral pair") {
  auto tri = load_tri("whitehead.tri");
  std::vector<Slope> slopes{Slope::of(-1, 2), Slope::unfilled()};
  auto sys = gluing_system(tri, slopes);
  // 4 edge rows, 1 filling row for cusp 0, completeness pair for cusp 1
  REQUIRE(sys.rows.size() == 7);
  int filling = -1;
  for (size_t i = 0; i < sys.rows.size(); ++i)
    if (sys.kinds[i] == RowKind::filling) filling = static_cast<int>(i);
  REQUIRE(filling >= 0);
  CHECK(sys.targets[filling] == 2);
  // normalized slope is 1/-2
  const auto& mu = tri.cusps[0].meridian;
  const auto& la = tri.cusps[0].longitude;
  for (size_t j = 0; j < mu.size(); ++j)
    CHECK(sys.rows[filling][j] == mu[j] - 2 * la[j]);
}

TEST_CASE("slope normalization") {
  CHECK(Slope::of(-1, 2) == Slope::of(1, -2));
  CHECK(Slope::of(0, -1) == Slope::of(0, 1));
  Slope s = Slope::of(-3, 7);
  CHECK(Slope::of(s.p(), s.q()) == s);  // idempotent
  CHECK(s.p() > 0);
}

TEST_CASE("slope constructors reject degenerate input") {
  CHECK_THROWS_AS(Slope::of(0, 0), SlopeError);
  CHECK_THROWS_AS(Slope::of(2, 4), SlopeError);
  CHECK_THROWS_AS(Slope::parse("x"), SlopeError);
  CHECK_THROWS_AS(Slope::parse("1/"), SlopeError);
  CHECK_THROWS_AS(Slope::parse(""), SlopeError);
  CHECK(Slope::parse("inf") == Slope::unfilled());
  CHECK(Slope::parse("0/-1") == Slope::of(0, 1));
  CHECK(Slope::parse("-3/5") == Slope::of(3, -5));
  CHECK(Slope::of(1, -2).str() == "1/-2");
  CHECK(Slope::unfilled().str() == "inf");
}

TEST_CASE("system digests separate different fillings") {
  auto tri = load_tri("figure_eight.tri");
  auto a = gluing_system(tri).digest();
  auto b = gluing_system(tri, {Slope::of(1, 2)}).digest();
  auto c = gluing_system(tri).digest();
  CHECK(a == c);
  CHECK(a != b);
  CHECK(a.size() == 16);
}

TEST_CASE("slope count must match the cusp count") {
  auto tri = load_tri("whitehead.tri");
  CHECK_THROWS_AS(gluing_system(tri, {Slope::of(1, 2)}), SlopeError);
}
