#include <numeric>

#include "cuspcert/exact.hpp"
#include "cuspcert/perm4.hpp"
#include "cuspcert/triangulation.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cuspcert;

namespace {

struct Fixture {
  const char* file;
  int tets, cusps;
};

const Fixture kFixtures[] = {
    {"figure_eight.tri", 2, 1},
    {"whitehead.tri", 4, 2},
    {"borromean.tri", 8, 3},
};

}  // namespace

TEST_CASE("edge slots follow the opposite-edge convention") {
  CHECK(edge_slot(0, 1) == edge_slot(2, 3));
  CHECK(edge_slot(0, 2) == edge_slot(1, 3));
  CHECK(edge_slot(0, 3) == edge_slot(1, 2));
  CHECK(edge_slot(0, 1) == 0);
  CHECK(edge_slot(0, 2) == 1);
  CHECK(edge_slot(0, 3) == 2);
  CHECK(edge_slot(1, 0) == 0);
}

TEST_CASE("fixtures validate with the expected combinatorics") {
  for (const auto& f : kFixtures) {
    CAPTURE(f.file);
    auto tri = load_tri(f.file);
    auto rep = tri.validate();
    CHECK(rep.pass);
    CHECK(tri.size() == f.tets);
    CHECK(rep.edge_class_count == f.tets);  // edge classes = n on a cusped complex
    CHECK(rep.cusp_link_count == f.cusps);
    for (int e : rep.cusp_euler) CHECK(e == 0);
    CHECK(rep.edge_row_rank == f.tets - f.cusps);
  }
}

TEST_CASE("every tetrahedron contributes (2,2,2) across the edge rows") {
  for (const auto& f : kFixtures) {
    CAPTURE(f.file);
    auto tri = load_tri(f.file);
    auto rows = tri.edge_rows();
    REQUIRE(static_cast<int>(rows.size()) == tri.size());
    for (int t = 0; t < tri.size(); ++t) {
      long long a = 0, b = 0, c = 0;
      for (const auto& row : rows) {
        a += row[3 * t];
        b += row[3 * t + 1];
        c += row[3 * t + 2];
      }
      CHECK(a == 2);
      CHECK(b == 2);
      CHECK(c == 2);
    }
  }
}

TEST_CASE("parse/serialize round-trip is the identity on content") {
  for (const auto& f : kFixtures) {
    CAPTURE(f.file);
    auto tri = load_tri(f.file);
    std::string once = tri.serialize();
    auto again = IdealTriangulation::parse(once);
    CHECK(again.serialize() == once);
    CHECK(again.name == tri.name);
    CHECK(again.glue == tri.glue);
    for (size_t i = 0; i < tri.cusps.size(); ++i) {
      CHECK(again.cusps[i].meridian == tri.cusps[i].meridian);
      CHECK(again.cusps[i].longitude == tri.cusps[i].longitude);
    }
  }
}

TEST_CASE("parsing is whitespace-insensitive") {
  std::string text = read_data_file("figure_eight.tri");
  std::string spaced;
  for (char ch : text) {
    spaced += ch;
    if (ch == ',') spaced += "\n\t ";
  }
  auto a = IdealTriangulation::parse(text);
  auto b = IdealTriangulation::parse(spaced);
  CHECK(a.serialize() == b.serialize());
}

TEST_CASE("unknown fields are rejected") {
  std::string text = read_data_file("figure_eight.tri");
  auto pos = text.find("\"name\"");
  REQUIRE(pos != std::string::npos);
  std::string bad = text.substr(0, pos) + "\"extra\": 1, " + text.substr(pos);
  CHECK_THROWS_AS(IdealTriangulation::parse(bad), TriangulationError);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(IdealTriangulation::parse(""), TriangulationError);
  CHECK_THROWS_AS(IdealTriangulation::parse("not a document"), TriangulationError);
  CHECK_THROWS_AS(IdealTriangulation::parse("{\"name\": \"x\"}"), TriangulationError);
}

TEST_CASE("non-orientable gluings fail validation") {
  // One tetrahedron, both face pairs glued by the even double transposition.
  IdealTriangulation tri;
  tri.name = "nonorientable";
  Perm4 q{1, 0, 3, 2};
  tri.glue = {{FaceGluing{0, q}, FaceGluing{0, q}, FaceGluing{0, q}, FaceGluing{0, q}}};
  CHECK(tri.involutive());
  CHECK_FALSE(tri.orientable());
  auto rep = tri.validate();
  CHECK_FALSE(rep.pass);
  bool mentions = false;
  for (const auto& f : rep.failures)
    if (f.find("orientability") != std::string::npos) mentions = true;
  CHECK(mentions);
}

TEST_CASE("broken involution fails validation") {
  auto tri = load_tri("figure_eight.tri");
  tri.glue[0][0].perm = Perm4{2, 1, 0, 3};  // partner no longer carries the inverse
  auto rep = tri.validate();
  CHECK_FALSE(rep.pass);
  bool mentions = false;
  for (const auto& f : rep.failures)
    if (f.find("involution") != std::string::npos) mentions = true;
  CHECK(mentions);
}

TEST_CASE("edge and vertex classes partition the expected incidences") {
  for (const auto& f : kFixtures) {
    CAPTURE(f.file);
    auto tri = load_tri(f.file);
    auto edges = tri.edge_classes();
    // 6 edge incidences per tetrahedron, each in exactly one class
    size_t total = 0;
    for (const auto& cls : edges) total += cls.size();
    CHECK(total == static_cast<size_t>(6 * tri.size()));
    CHECK(tri.vertex_classes().size() == static_cast<size_t>(f.cusps));
  }
}
