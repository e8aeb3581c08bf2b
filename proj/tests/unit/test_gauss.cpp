#include "doctest.h"

#include "skein/gauss.hpp"

using namespace skein;

TEST_CASE("parse basic codes") {
  GaussCode c = GaussCode::parse("(O1+O2+U1+U2+)");
  CHECK(c.component_count() == 1);
  CHECK(c.crossing_count() == 2);
  CHECK(c.sign(1) == 1);
  CHECK(c.sign(2) == 1);
  CHECK(c.str() == "(O1+O2+U1+U2+)");

  GaussCode empty = GaussCode::parse("()");
  CHECK(empty.component_count() == 1);
  CHECK(empty.crossing_count() == 0);

  GaussCode lnk = GaussCode::parse("(O1+U2+)|(U1+O2+)");
  CHECK(lnk.component_count() == 2);

  GaussCode lng = GaussCode::parse("[O1+U1+]");
  CHECK_FALSE(lng.components[0].closed);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(GaussCode::parse("(O1+U1-)"), ParseError);        // sign mismatch
  CHECK_THROWS_AS(GaussCode::parse("(O1+O2+U1+)").validate(), ValidationError);
  CHECK_THROWS_AS(GaussCode::parse("(O1+O1+)"), ValidationError);   // role collision
  CHECK_THROWS_AS(GaussCode::parse("(O1+X2+U1+)"), ParseError);
}

TEST_CASE("flat codes round trip") {
  GaussCode f = GaussCode::parse("(F1+F2-F1+F2-)");
  CHECK(f.flavor(1) == Flavor::Flat);
  CHECK(f.str() == "(F1+F2-F1+F2-)");
  // Internal lift: first passage is Over.
  CHECK(f.components[0].passages[0].role == Role::Over);
  CHECK(f.components[0].passages[2].role == Role::Under);
}

TEST_CASE("mirror and reverse") {
  GaussCode c = GaussCode::parse("(O1+O2+U1+U2+)");
  GaussCode m = c.mirror();
  CHECK(m.sign(1) == -1);
  CHECK(m.components[0].passages[0].role == Role::Under);
  CHECK(m.mirror() == c);

  GaussCode r = c.reversed();
  CHECK(r.components[0].passages[0].crossing == 2);
  CHECK(r.reversed() == c);

  // Mirror acts trivially on flat codes.
  GaussCode f = GaussCode::parse("(F1+F2-F1+F2-)");
  CHECK(f.mirror().canonical_string() == f.canonical_string());
}

TEST_CASE("normalization is rotation invariant") {
  GaussCode a = GaussCode::parse("(O1+U2+O3+U1+O2+U3+)");
  GaussCode b = GaussCode::parse("(U1+O2+U3+O1+U2+O3+)"); // rotated by 3
  CHECK(a.canonical_string() == b.canonical_string());
  // Round trip: serialize(parse(x)) is stable after normalization.
  GaussCode n = a.normalized();
  CHECK(GaussCode::parse(n.str()).str() == n.str());
}

TEST_CASE("disjoint union unit law") {
  GaussCode c = GaussCode::parse("(O1+U1+)");
  GaussCode e;
  GaussCode u = GaussCode::disjoint_union(c, e);
  CHECK(u == c);
}

TEST_CASE("oriented smoothing splits and merges") {
  GaussCode c = GaussCode::parse("(O1+O2+U1+U2+)");
  GaussCode s = c;
  s.smooth_oriented(1);
  CHECK(s.component_count() == 2);
  CHECK(s.crossing_count() == 1);
  // Smoothing the remaining crossing merges the components back.
  s.smooth_oriented(2);
  CHECK(s.crossing_count() == 0);
  CHECK(s.component_count() == 1);
}

TEST_CASE("unoriented smoothing reverses an arc") {
  GaussCode c = GaussCode::parse("(O1+O2+U1+U2+)");
  GaussCode s = c;
  s.smooth_unoriented(1);
  CHECK(s.component_count() == 1);
  CHECK(s.crossing_count() == 1);
  // Crossing 2 had one passage in the reversed arc: its sign flips.
  CHECK(s.sign(2) == -1);
}

TEST_CASE("gaussian interleaving count") {
  GaussCode c = GaussCode::parse("(O1+O2+U1+U2+)");
  CHECK(c.passages_between(1) % 2 == 1);
  CHECK(c.passages_between(2) % 2 == 1);
  GaussCode t = GaussCode::parse("(O1+U2+O3+U1+O2+U3+)");
  CHECK(t.passages_between(1) % 2 == 0);
}
