#pragma once

#include "skein/invariants.hpp"
#include "skein/map.hpp"
#include "skein/moves.hpp"

namespace skein {

// --- standard codes -----------------------------------------------------------

namespace codes {
inline const char* unknot = "()";
inline const char* kink = "(O1+U1+)";
inline const char* trefoil = "(O1+U2+O3+U1+O2+U3+)";       // right-handed
inline const char* trefoil_left = "(O1-U2-O3-U1-O2-U3-)";
inline const char* figure8 = "(O1+U2+O3-U4-O2+U1+O4-U3-)";
inline const char* virtual_trefoil = "(O1+O2+U1+U2+)";      // Green 2.1
inline const char* hopf = "(O1+U2+)|(U1+O2+)";
inline const char* hopf_negative = "(O1-U2-)|(U1-O2-)";
inline const char* unlink2 = "()|()";
inline const char* flat_example3 = "(F1+F2+F3+F1+F3+F2+)";  // lifts to 3.1/3.3/3.4-bar
} // namespace codes

// --- plane fixtures ------------------------------------------------------------

SurfaceDiagram plane_circle(bool ccw);
SurfaceDiagram kinked_circle_map(bool left_side, bool first_over);
// The figure-eight curve with one crossing of the given sign and zero
// rotation number, dressed with |k| enclosing circles as in the based index
// polynomial normal forms: P = eps * t^k.
SurfaceDiagram infinity_map(int k, int eps);
// Disjoint union of infinity diagrams near the basepoint realizing P = f(t).
SurfaceDiagram f_infinity_map(const Laurent& f);

SurfaceDiagram map_disjoint_union(const SurfaceDiagram& a, const SurfaceDiagram& b);

// --- torus / annulus fixtures -----------------------------------------------------

// One-crossing cellular diagram of the (1,0) and (0,1) circles.
SurfaceDiagram torus_rose(int sign);
SurfaceDiagram torus_loop(long long p, long long q);
SurfaceDiagram annulus_loop(long long winding);

// --- corpus generation ------------------------------------------------------------

struct CorpusOptions {
  int max_crossings = 6;
  int max_diagrams = 400;
  int walk_length = 6;
  int walks_per_seed = 30;
  uint64_t seed = 1;
  bool planar_only = false; // keep Carter genus zero (classical diagrams)
};

// Deterministic corpus of codes reachable from the seeds by theory moves.
std::vector<GaussCode> generate_code_corpus(const std::vector<GaussCode>& seeds,
                                            const KnotTheory& theory, const CorpusOptions& opts);

// Random surface diagrams reachable from the given seed by map-level moves.
struct MapWalkOptions {
  int crossing_cap = 7;
  bool allow_o1 = true;
  bool allow_o3 = true;
  bool allow_flat = false;
};
SurfaceDiagram random_map_walk(const SurfaceDiagram& seed, int steps, uint64_t seed_value,
                               const MapWalkOptions& opts = {});

} // namespace skein
