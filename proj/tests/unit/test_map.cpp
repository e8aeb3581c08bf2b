#include "doctest.h"

#include "skein/carter.hpp"
#include "skein/map.hpp"
#include "skein/map_moves.hpp"

using namespace skein;

namespace {
const char* kTrefoil = "(O1+U2+O3+U1+O2+U3+)";
}

TEST_CASE("carter surface of the trefoil is a sphere") {
  GaussCode c = GaussCode::parse(kTrefoil);
  SurfaceDiagram d = carter_surface(c);
  d.validate();
  CHECK(d.vertex_count() == 3);
  CHECK(d.edge_count() == 6);
  CHECK(d.faces().corners.size() == 5);
  CHECK(map_genus(d) == 0);
}

TEST_CASE("carter genus of virtual trefoil") {
  GaussCode c = GaussCode::parse("(O1+O2+U1+U2+)");
  SurfaceDiagram d = carter_surface(c);
  d.validate();
  CHECK(map_genus(d) == 1);
}

TEST_CASE("flat kink and flat 1212 genus") {
  CHECK(map_genus(carter_surface(GaussCode::parse("(F1+F1+)"))) == 0);
  CHECK(map_genus(carter_surface(GaussCode::parse("(F1+F2+F1+F2+)"))) == 1);
}

TEST_CASE("plane diagram round trips to the same code") {
  GaussCode c = GaussCode::parse(kTrefoil);
  SurfaceDiagram d = plane_diagram(c);
  d.validate();
  GaussCode back = d.to_gauss();
  CHECK(back.canonical_string() == c.canonical_string());
}

TEST_CASE("signs survive the carter construction") {
  GaussCode c = GaussCode::parse("(O1-U2+O3-U1-O2+U3-)");
  SurfaceDiagram d = carter_surface(c);
  GaussCode back = d.to_gauss();
  CHECK(back.canonical_string() == c.canonical_string());
}

TEST_CASE("long component construction") {
  GaussCode c = GaussCode::parse("[O1+U1+]");
  SurfaceDiagram d = carter_surface(c);
  d.validate();
  auto strands = d.strands();
  REQUIRE(strands.size() == 1);
  CHECK_FALSE(strands[0].closed);
  GaussCode back = d.to_gauss();
  CHECK(back.canonical_string() == c.canonical_string());
}

TEST_CASE("intersection pairing is antisymmetric and vanishes on self") {
  GaussCode c = GaussCode::parse("(F1+F2+F1+F2+)");
  CodeMapLink link;
  SurfaceDiagram d = carter_surface_linked(c, link);
  ClosedWalk h1 = half_walk(d, link, 1, true);
  ClosedWalk h2 = half_walk(d, link, 2, true);
  CHECK(d.intersect(h1, h1) == 0);
  CHECK(d.intersect(h2, h2) == 0);
  CHECK(d.intersect(h1, h2) == -d.intersect(h2, h1));
  // On the torus Carter surface of 1212 the two halves meet once.
  CHECK(std::abs(d.intersect(h1, h2)) == 1);
}

TEST_CASE("torus free loop and wall pairing") {
  SurfaceDiagram d = SurfaceDiagram::from_free_loop(Surface::torus(), {1, 0}, true);
  d.validate();
  CHECK(d.total_class() == HomClass{1, 0});
  CHECK(d.mu() == 1);
  CHECK(hom_mu(Surface::torus(), {2, 4}) == 2);
  CHECK(hom_pair(Surface::torus(), {2, 3}, {1, 0}) == -3);
  CHECK(hom_pair(Surface::torus(), {2, 3}, {0, 1}) == 2);
}

TEST_CASE("kink insertion on a promoted loop validates") {
  SurfaceDiagram d = SurfaceDiagram::from_free_loop(Surface::torus(), {1, 0}, true);
  int v = promote_free_loop(d, 0, true, true);
  d.validate();
  CHECK(d.vertex_count() == 1);
  CHECK(map_is_kink(d, v));
  CHECK(d.total_class() == HomClass{1, 0});
  // left kink with first passage over is a negative crossing
  CHECK(d.vertex_sign(v) == -1);
  map_o1_decrease(d, v);
  d.validate();
  CHECK(d.vertex_count() == 0);
  REQUIRE(d.free_loops.size() == 1);
  CHECK(d.free_loops[0].hom == HomClass{1, 0});
}

TEST_CASE("kink side and sign table") {
  // left kink: over-first => -, under-first => +; right kink flips.
  for (bool left : {true, false})
    for (bool over_first : {true, false}) {
      SurfaceDiagram d = SurfaceDiagram::from_free_loop(Surface::plane(), {}, true);
      int v = promote_free_loop(d, 0, left, over_first);
      d.validate();
      int expect = (left == over_first) ? -1 : 1;
      CHECK(d.vertex_sign(v) == expect);
    }
}

TEST_CASE("plane kinked circle euler data") {
  SurfaceDiagram d = SurfaceDiagram::from_free_loop(Surface::plane(), {}, true);
  promote_free_loop(d, 0, true, true);
  d.base_corner = 0;
  d.validate();
  CHECK(d.vertex_count() == 1);
  CHECK(d.edge_count() == 2);
  CHECK(d.faces().corners.size() == 3);
}
