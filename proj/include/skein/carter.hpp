#pragma once

#include "skein/gauss.hpp"
#include "skein/map.hpp"

namespace skein {

// The canonical abstract-surface realization of a Gauss code: both strands
// cross transversally at every crossing, the rotation forced by signs.
SurfaceDiagram carter_surface(const GaussCode& code);

int map_genus(const SurfaceDiagram& d);

// Reinterpret a genus-zero code as a plane (or sphere) diagram. The outer
// face defaults to the corner clockwise of the first passage's in-end.
SurfaceDiagram plane_diagram(const GaussCode& code, Surface surface = Surface::plane(),
                             int outer_corner = -1);

// Correspondence between code crossings and map vertices for diagrams built
// by carter_surface / plane_diagram (crossing id -> vertex index).
struct CodeMapLink {
  std::map<int, int> vertex_of_crossing;
  std::map<int, std::pair<int, int>> passage_ends; // crossing -> (first in-end, second in-end)
};
SurfaceDiagram carter_surface_linked(const GaussCode& code, CodeMapLink& link);

// Closed walk of a half of a self-crossing: runs from one passage around to
// the other, closed through the vertex corner. `first_to_second` selects the
// half that leaves along the first passage (in traversal order).
ClosedWalk half_walk(const SurfaceDiagram& d, const CodeMapLink& link, int crossing,
                     bool first_to_second);

// Whether the half leaving along the first passage is the left half (its
// exit direction is the counterclockwise neighbour of the other exit).
bool first_half_is_left(const SurfaceDiagram& d, const CodeMapLink& link, int crossing);

} // namespace skein
