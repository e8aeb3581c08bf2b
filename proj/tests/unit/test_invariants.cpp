#include "doctest.h"

#include "skein/corpus.hpp"
#include "skein/invariants.hpp"
#include "skein/walk.hpp"
#include <random>

using namespace skein;

namespace {

// Independent bracket oracle: skein recursion with circle reduction.
Laurent bracket_recursive(const GaussCode& code) {
  if (code.crossing_count() == 0) {
    Laurent delta = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
    Laurent v(1);
    for (int i = 0; i < code.component_count(); ++i) v *= delta;
    return v;
  }
  int id = code.crossings.begin()->first;
  int sign = code.sign(id);
  GaussCode a = code, b = code;
  if (sign > 0) {
    a.smooth_oriented(id);
    b.smooth_unoriented(id);
  } else {
    a.smooth_unoriented(id);
    b.smooth_oriented(id);
  }
  return Laurent::monomial(1, 1) * bracket_recursive(a) +
         Laurent::monomial(1, -1) * bracket_recursive(b);
}

} // namespace

TEST_CASE("rot of plain circles and kinks") {
  CHECK(rot(plane_circle(true)).rot_lift == 1);
  CHECK(rot(plane_circle(false)).rot_lift == -1);
  // left kink on a ccw circle turns twice
  SurfaceDiagram d = kinked_circle_map(true, true);
  CHECK(rot(d).rot_lift == 2);
  // infinity curve has rotation zero
  CHECK(rot(infinity_map(0, 1)).rot_lift == 0);
  CHECK(rot(infinity_map(3, -1)).rot_lift == 0);
  // torus (1,0) free loop
  CHECK(rot(torus_loop(1, 0)).rot_lift == 0);
}

TEST_CASE("rot is odd under reversal") {
  SurfaceDiagram d = kinked_circle_map(false, true);
  CHECK(rot(d.reversed()).rot_lift == -rot(d).rot_lift);
}

TEST_CASE("index polynomial of infinity diagrams") {
  for (int k = -5; k <= 5; ++k) {
    for (int eps : {1, -1}) {
      SurfaceDiagram d = infinity_map(k, eps);
      IndexPoly p = index_polynomial(d);
      CHECK(p.mu == 0);
      CHECK(p.p == Laurent::monomial(eps, k));
    }
  }
}

TEST_CASE("index polynomial realizes f at f(infinity)") {
  Laurent f = Laurent::monomial(2, 3) + Laurent::monomial(-1, 0) + Laurent::monomial(1, -2);
  SurfaceDiagram d = f_infinity_map(f);
  IndexPoly p = index_polynomial(d);
  CHECK(p.p == f);
  CHECK(rot(d).rot_lift == 0);
}

TEST_CASE("P(1) equals the writhe on plane diagrams") {
  for (auto text : {codes::trefoil, codes::trefoil_left, codes::figure8, codes::kink}) {
    GaussCode c = GaussCode::parse(text);
    SurfaceDiagram d = plane_diagram(c);
    IndexPoly p = index_polynomial(d);
    CHECK(p.p.eval(1) == writhe(c));
  }
}

TEST_CASE("unoriented profile of infinity normal forms") {
  for (int k = -5; k <= 5; ++k) {
    for (int eps : {1, -1}) {
      SurfaceDiagram d = infinity_map(k, eps);
      UnorProfile u = unoriented_profile(d);
      CHECK(u.rho == (((k % 2) + 2) % 2));
      CHECK(u.wr_odd == ((k % 2 == 0) ? eps : -eps));
    }
  }
}

TEST_CASE("unoriented profile of f(infinity)") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed);
    Laurent f;
    int terms = 1 + (int)(rng() % 3);
    for (int i = 0; i < terms; ++i)
      f += Laurent::monomial((long long)(rng() % 3) - 1, (long long)(rng() % 7) - 3);
    SurfaceDiagram d = f_infinity_map(f);
    UnorProfile u = unoriented_profile(d);
    CHECK(((u.rho - f.derivative_at_one()) % 2 + 2) % 2 == 0);
    CHECK(u.wr_odd == f.eval(-1));
  }
}

TEST_CASE("rho0 of nullhomologous circles counts components mod 2") {
  SurfaceDiagram d = plane_circle(true);
  for (int m = 1; m <= 4; ++m) {
    CHECK(unoriented_profile(d).rho0 == m % 2);
    d.add_free_loop({}, m % 2 == 0);
  }
}

TEST_CASE("kauffman bracket of small diagrams") {
  Laurent delta = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
  // single circle
  CHECK(kauffman_bracket(GaussCode::parse("()")).value == delta);
  // empty diagram
  CHECK(kauffman_bracket(GaussCode()).value == Laurent(1));
  // positive kink: <D> = -a^3 delta, X = delta
  Bracket k = kauffman_bracket(GaussCode::parse(codes::kink));
  CHECK(k.value == Laurent::monomial(-1, 3) * delta);
  CHECK(k.x == delta);
}

TEST_CASE("state sum agrees with the skein recursion") {
  for (auto text : {codes::trefoil, codes::trefoil_left, codes::figure8, codes::kink,
                    codes::hopf, codes::virtual_trefoil}) {
    GaussCode c = GaussCode::parse(text);
    CHECK(kauffman_bracket(c).value == bracket_recursive(c));
  }
}

TEST_CASE("jones polynomial of the right trefoil") {
  Bracket b = kauffman_bracket(GaussCode::parse(codes::trefoil));
  // V(right trefoil) = -t^4 + t^3 + t with the circle value delta;
  // in the s = t^(1/2) variable: (-s^8 + s^6 + s^2) * (-s - s^-1).
  Laurent v = Laurent::monomial(-1, 8) + Laurent::monomial(1, 6) + Laurent::monomial(1, 2);
  Laurent circ = Laurent::monomial(-1, 1) + Laurent::monomial(-1, -1);
  CHECK(b.jones == v * circ);
  // the left trefoil is the mirror
  Bracket bl = kauffman_bracket(GaussCode::parse(codes::trefoil_left));
  Laurent mirror;
  for (auto& [e, c] : b.jones.coeffs()) mirror += Laurent::monomial(c, -e);
  CHECK(bl.jones == mirror);
}

TEST_CASE("bracket is invariant under code-level reidemeister moves") {
  GaussCode c = GaussCode::parse(codes::figure8);
  Bracket base = kauffman_bracket(c);
  auto theory = KnotTheory::preset("class+");
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    WalkOptions wo;
    wo.crossing_cap = 9;
    auto w = random_walk(c, theory, 8, seed, wo);
    CHECK(kauffman_bracket(w.code).x == base.x);
  }
}

TEST_CASE("two variable bracket collapses to the classical one") {
  GaussCode c = GaussCode::parse(codes::trefoil);
  Laurent a = Laurent::monomial(1, 1), b = Laurent::monomial(1, -1);
  CHECK(kauffman_bracket_two_var_at(c, a, b) == kauffman_bracket(c).value);
}
