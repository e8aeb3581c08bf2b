#include "doctest.h"

#include "skein/corpus.hpp"
#include "skein/invariants.hpp"
#include "skein/map_moves.hpp"

using namespace skein;

TEST_CASE("plane diagrams collapse to the trivial class in the full theory") {
  GaussCode c = GaussCode::parse(codes::trefoil);
  SurfaceDiagram d = plane_diagram(c);
  CHECK(skein_class(d, "H2+,O1,O2,O3").payload == "()");
  SkeinClass t = skein_class(d, "H2o+,O2,O3");
  // D -> ([D], rot(D), wr(D))
  CHECK(t.payload == "();" + std::to_string(rot(d).rot_lift) + ";3");
}

TEST_CASE("torus loop classes") {
  SurfaceDiagram d = torus_loop(1, 1);
  CHECK(skein_class(d, "H2+").payload == "(1,1)");
  SurfaceDiagram k = d;
  promote_free_loop(k, 0, true, true);
  // adding a kink keeps the unoriented class
  CHECK(skein_class(k, "H2o,O1,O2,O3") == skein_class(d, "H2o,O1,O2,O3"));
}

TEST_CASE("skein classes are invariant along plane map walks") {
  SurfaceDiagram seed = kinked_circle_map(true, true);
  struct Row {
    const char* tag;
    bool o1;
    bool o3;
  };
  for (auto row : {Row{"H2o+,O2", false, false}, Row{"H2o+,O2,O3", false, true},
                   Row{"H2+,O2,O3", false, true}, Row{"H2o+,O1,O2,O3", true, true},
                   Row{"H2o,O2", false, false}, Row{"H2o,O2,O3", false, true},
                   Row{"H2,O2,O3", false, true}, Row{"H2o,O1,O2,O3", true, true},
                   Row{"H2o+,O2,2Oinf", false, false}, Row{"H2,O2,2Oinf", false, false}}) {
    SkeinClass base = skein_class(seed, row.tag);
    for (uint64_t s = 1; s <= 6; ++s) {
      MapWalkOptions mo;
      mo.crossing_cap = 6;
      mo.allow_o1 = row.o1;
      mo.allow_o3 = row.o3;
      SurfaceDiagram d = random_map_walk(seed, 7, s, mo);
      CHECK(skein_class(d, row.tag) == base);
    }
  }
}

TEST_CASE("h2o+ surgery changes o2o3 class but keeps the h2-style data") {
  SurfaceDiagram d = kinked_circle_map(true, true);
  auto f = d.faces();
  // find two arcs of a common face admitting an oriented surgery
  bool done = false;
  for (size_t face = 0; face < f.corners.size() && !done; ++face) {
    auto& cyc = f.corners[face];
    for (size_t i = 0; i < cyc.size() && !done; ++i)
      for (size_t j = 0; j < cyc.size() && !done; ++j) {
        if (i == j) continue;
        int d1 = d.sigma(cyc[i]), d2 = d.sigma(cyc[j]);
        if (d1 == d2 || d.pair_[d1] == d2) continue;
        if (!map_surgery_oriented(d, cyc[i], cyc[j])) continue;
        SurfaceDiagram t = d;
        SkeinClass before = skein_class(t, "H2o+,O2");
        map_surgery(t, cyc[i], cyc[j], true);
        t.validate();
        CHECK(skein_class(t, "H2o+,O2") == before);
        done = true;
      }
  }
  CHECK(done);
}

TEST_CASE("unoriented pair normalization collapses the involution") {
  // On closed surfaces (rho, wr_odd) ~ (rho + wr_odd, -wr_odd).
  SurfaceDiagram a = torus_loop(0, 0);
  SurfaceDiagram b = a.reversed();
  CHECK(skein_class(a, "H2o,O2") == skein_class(b, "H2o,O2"));
}
