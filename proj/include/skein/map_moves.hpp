#pragma once

#include <map>
#include <utility>

#include "skein/map.hpp"

namespace skein {

enum class SmoothType : uint8_t { Or, Unor, A, B };

// Connection pairs replacing a dissolved vertex: each pair (p,q) of its ends
// becomes a direct join of the incident edges.
struct Reconn {
  std::array<std::pair<int, int>, 2> pairs;
};

Reconn smoothing_pairs(const SurfaceDiagram& d, int v, SmoothType t);
Reconn identity_pairs(const SurfaceDiagram& d, int v);

// Dissolve the given vertices, rejoining edges per the connection pairs.
// Closed curves left without crossings become free loops.
void reconnect_vertices(SurfaceDiagram& d, const std::map<int, Reconn>& conn);

void smooth_at(SurfaceDiagram& d, int vertex, SmoothType t);

// Reidemeister moves; sites are identified by corners (end ids).
void map_o1_increase(SurfaceDiagram& d, int out_end, bool left_side, bool first_over);
bool map_is_kink(const SurfaceDiagram& d, int vertex);
void map_o1_decrease(SurfaceDiagram& d, int vertex);

void map_o2_increase(SurfaceDiagram& d, int corner1, int corner2, bool poker_is_first,
                     bool poker_over, bool bend);
bool map_is_o2_bigon(const SurfaceDiagram& d, int corner, bool require_classical = true);
void map_o2_decrease(SurfaceDiagram& d, int corner);

// Triangle moves. `classical_layering` reports whether the three crossings
// admit a top/middle/bottom order (Omega3); any triangle admits the rewiring.
struct TriangleSite {
  bool valid = false;
  std::array<int, 3> corners{};
  std::array<int, 3> vertices{};
  bool acyclic = false;
  bool all_positive = false;
};
TriangleSite map_triangle_at(const SurfaceDiagram& d, int corner);
void map_o3_move(SurfaceDiagram& d, const TriangleSite& site);

void map_cc(SurfaceDiagram& d, int vertex);

// H(2)-type band surgery between two arcs of a common face; optionally adds
// the compensating positively oriented circle (the H(2)^o form).
bool map_surgery_oriented(const SurfaceDiagram& d, int corner1, int corner2);
void map_surgery(SurfaceDiagram& d, int corner1, int corner2, bool with_circle);

// Promote a free loop into the edge structure as a one-kink component.
int promote_free_loop(SurfaceDiagram& d, int loop_index, bool left_side, bool first_over);

void vertex_gauge(SurfaceDiagram& d, int vertex, const HomClass& delta);

} // namespace skein
