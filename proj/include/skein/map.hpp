#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skein/errors.hpp"
#include "skein/gauss.hpp"

namespace skein {

struct Surface {
  // Abstract marks a Carter surface of unconstrained genus; it carries no
  // wall data and skips the Euler check.
  enum class Kind : uint8_t { Plane, Sphere, Annulus, Torus, Abstract };
  Kind kind = Kind::Plane;

  int rank() const {
    switch (kind) {
      case Kind::Annulus: return 1;
      case Kind::Torus: return 2;
      default: return 0;
    }
  }
  int chi_bar() const { return kind == Kind::Sphere ? 2 : 0; }
  bool closed() const { return kind == Kind::Sphere || kind == Kind::Torus; }
  static Surface plane() { return {Kind::Plane}; }
  static Surface sphere() { return {Kind::Sphere}; }
  static Surface annulus() { return {Kind::Annulus}; }
  static Surface torus() { return {Kind::Torus}; }
  static Surface abstract_surface() { return {Kind::Abstract}; }
  std::string name() const;
  static Surface from_name(const std::string&);
  bool operator==(const Surface&) const = default;
};

using HomClass = std::vector<long long>; // length = surface.rank()

HomClass hom_zero(int rank);
HomClass hom_add(const HomClass& a, const HomClass& b);
HomClass hom_neg(const HomClass& a);
bool hom_is_zero(const HomClass& a);
// Intersection form: 0 on plane/sphere/annulus, det on the torus.
long long hom_pair(const Surface& s, const HomClass& a, const HomClass& b);
long long hom_mu(const Surface& s, const HomClass& a);

// A visit of a curve at a vertex: enters through `in`, leaves through `out`.
// For a strand passing straight through a crossing the ends are opposite;
// corner connections of half-curves use non-opposite ends.
struct Visit {
  int in = -1;
  int out = -1;
};
using ClosedWalk = std::vector<Visit>;

struct FreeLoop {
  HomClass hom;
  bool ccw = true;          // meaningful when hom == 0
  int anchor = -1;          // an end id of the face holding the loop, or -1
  std::set<int> encloses;   // ends whose corner lies inside this loop (static fixtures)
  bool operator==(const FreeLoop&) const = default;
};

// Four-valent combinatorial map with over/under decorations and a wall
// cocycle encoding the first homology of the ambient surface. Ends are
// edge halves; rot lists the ends at a vertex counterclockwise.
class SurfaceDiagram {
public:
  Surface surface;

  // Per vertex: flavor, ccw end list (size 4, or 1 for strand endpoints).
  struct Vertex {
    Flavor flavor = Flavor::Classical;
    bool endpoint = false;
    std::vector<int> rot;
    // For classical/singular crossings: index into rot of one end of the
    // over strand (its partner is rot[(over_slot+2)%4]).
    int over_slot = 0;
  };

  std::vector<Vertex> vertices;
  std::vector<int> pair_;     // end -> end (edge involution)
  std::vector<int> vert_of_;  // end -> vertex
  std::vector<int> slot_of_;  // end -> slot
  std::vector<bool> inward_;  // end -> strand enters vertex through this end
  std::vector<HomClass> wall_; // end -> wall vector (contribution when leaving via this end)
  std::vector<bool> end_alive_;

  std::vector<FreeLoop> free_loops;
  int base_corner = -1; // end id marking the outer / basepoint face
  // Extra outer-face markers for disjoint unions placed side by side.
  std::vector<int> outer_marks;
  long long rot_tracked = 0;
  bool rot_valid = true;

  // --- structure access ---------------------------------------------------
  int end_count() const { return (int)pair_.size(); }
  int alive_end_count() const;
  int vertex_count() const; // live crossing vertices (non-endpoint)
  int edge_count() const;
  int sigma(int end) const;     // ccw-next end at the vertex
  int sigma_inv(int end) const;
  int opposite(int end) const;  // strand continuation through the vertex
  bool is_over_end(int end) const;
  int vertex_sign(int v) const;         // classical/singular vertices
  int vertex_sign_if_over(int v, int end_on_over_strand) const;

  // --- faces & potentials ---------------------------------------------------
  struct Faces {
    std::vector<std::vector<int>> corners; // face -> corner list (corner = end id)
    std::vector<int> face_of;              // corner/end -> face
  };
  Faces faces() const;
  int face_count() const { return (int)faces().corners.size(); }

  struct Potentials {
    std::vector<long long> value; // per face, representative
    long long modulus = 0;        // mu(D)
    int base_face = -1;
  };
  Potentials potentials(const Faces& f) const;
  // Potential at the corner of `end`, including enclosing free loops.
  long long corner_potential(const Faces& f, const Potentials& p, int end) const;

  // --- components -----------------------------------------------------------
  struct Strand {
    bool closed = true;
    std::vector<int> out_ends; // traversal order; for long strands starts at the endpoint
  };
  std::vector<Strand> strands() const;          // vertex-part components
  int component_count() const;                  // strands + free loops
  HomClass strand_class(const Strand& s) const;
  HomClass total_class() const;                 // [D]
  long long mu() const;

  // --- geometry utilities ----------------------------------------------------
  // Homological intersection number of closed walks (left push-off).
  long long intersect(const ClosedWalk& x, const ClosedWalk& y) const;
  static ClosedWalk walk_of_strand(const SurfaceDiagram& d, const Strand& s);

  struct SideAnalysis {
    bool contractible = false;
    bool ccw = false; // valid when contractible
  };
  // For an embedded closed strand-walk (no repeated vertices).
  SideAnalysis analyze_embedded(const ClosedWalk& w) const;
  bool cellular() const;

  long long rot_of_tracked() const;

  // --- conversions -----------------------------------------------------------
  GaussCode to_gauss() const;
  SurfaceDiagram mirror() const;   // swap over/under everywhere
  SurfaceDiagram reversed() const; // reverse all strand orientations

  void validate() const;

  // --- construction helpers ---------------------------------------------------
  static SurfaceDiagram empty(Surface s);
  static SurfaceDiagram from_free_loop(Surface s, HomClass hom, bool ccw);
  void add_free_loop(HomClass hom, bool ccw, int anchor = -1);

  // Internal editing used by the move engine.
  int new_end();
  void kill_end(int e);
  void link_ends(int a, int b); // set pair_
  void set_wall(int end, HomClass w);
};

} // namespace skein
