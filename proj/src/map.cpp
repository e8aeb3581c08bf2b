#include "skein/map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace skein {

std::string Surface::name() const {
  switch (kind) {
    case Kind::Plane: return "plane";
    case Kind::Sphere: return "sphere";
    case Kind::Annulus: return "annulus";
    case Kind::Torus: return "torus";
    case Kind::Abstract: return "abstract";
  }
  return "?";
}

Surface Surface::from_name(const std::string& n) {
  if (n == "plane") return plane();
  if (n == "sphere") return sphere();
  if (n == "annulus") return annulus();
  if (n == "torus") return torus();
  throw ParseError("unknown surface: " + n);
}

HomClass hom_zero(int rank) { return HomClass(rank, 0); }

HomClass hom_add(const HomClass& a, const HomClass& b) {
  HomClass r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

HomClass hom_neg(const HomClass& a) {
  HomClass r = a;
  for (auto& x : r) x = -x;
  return r;
}

bool hom_is_zero(const HomClass& a) {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

long long hom_pair(const Surface& s, const HomClass& a, const HomClass& b) {
  if (s.kind != Surface::Kind::Torus) return 0;
  return a[0] * b[1] - a[1] * b[0];
}

long long hom_mu(const Surface& s, const HomClass& a) {
  if (s.kind != Surface::Kind::Torus) return 0;
  return std::gcd(std::abs(a[0]), std::abs(a[1]));
}

int SurfaceDiagram::alive_end_count() const {
  int n = 0;
  for (bool b : end_alive_)
    if (b) ++n;
  return n;
}

int SurfaceDiagram::vertex_count() const {
  int n = 0;
  for (auto& v : vertices)
    if (!v.rot.empty() && !v.endpoint) ++n;
  return n;
}

int SurfaceDiagram::edge_count() const { return alive_end_count() / 2; }

int SurfaceDiagram::sigma(int end) const {
  const auto& v = vertices[vert_of_[end]];
  int k = (int)v.rot.size();
  return v.rot[(slot_of_[end] + 1) % k];
}

int SurfaceDiagram::sigma_inv(int end) const {
  const auto& v = vertices[vert_of_[end]];
  int k = (int)v.rot.size();
  return v.rot[(slot_of_[end] + k - 1) % k];
}

int SurfaceDiagram::opposite(int end) const {
  const auto& v = vertices[vert_of_[end]];
  if (v.endpoint) return -1;
  return v.rot[(slot_of_[end] + 2) % 4];
}

bool SurfaceDiagram::is_over_end(int end) const {
  const auto& v = vertices[vert_of_[end]];
  return slot_of_[end] % 2 == v.over_slot % 2;
}

int SurfaceDiagram::vertex_sign_if_over(int v, int end_on_over_strand) const {
  // Sign of the crossing if the strand through `end_on_over_strand` were the
  // over strand: +1 iff the under direction is the ccw quarter turn of the
  // over direction, i.e. the ccw order reads (O_out, U_out, O_in, U_in).
  const auto& vx = vertices[v];
  int over_par = slot_of_[end_on_over_strand] % 2;
  int u_out = -1;
  for (int s = 0; s < 4; ++s) {
    int e = vx.rot[s];
    if (s % 2 != over_par && !inward_[e]) u_out = e;
  }
  int next = sigma(u_out);
  return inward_[next] ? 1 : -1;
}

int SurfaceDiagram::vertex_sign(int v) const {
  const auto& vx = vertices[v];
  return vertex_sign_if_over(v, vx.rot[vx.over_slot]);
}

SurfaceDiagram::Faces SurfaceDiagram::faces() const {
  Faces f;
  f.face_of.assign(end_count(), -1);
  for (int e = 0; e < end_count(); ++e) {
    if (!end_alive_[e] || f.face_of[e] != -1) continue;
    std::vector<int> cycle;
    int cur = e;
    while (f.face_of[cur] == -1) {
      f.face_of[cur] = (int)f.corners.size();
      cycle.push_back(cur);
      cur = pair_[sigma(cur)];
    }
    f.corners.push_back(std::move(cycle));
  }
  return f;
}

SurfaceDiagram::Potentials SurfaceDiagram::potentials(const Faces& f) const {
  Potentials p;
  long long mu_d = mu();
  p.modulus = mu_d;
  p.value.assign(f.corners.size(), 0);
  if (f.corners.empty()) return p;
  std::vector<bool> seen(f.corners.size(), false);
  int base = base_corner >= 0 && end_alive_[base_corner] ? f.face_of[base_corner] : 0;
  p.base_face = base;
  std::queue<int> q;
  q.push(base);
  seen[base] = true;
  p.value[base] = 0;
  // Components placed beside the basepoint root at their own outer faces.
  for (int m : outer_marks) {
    if (m < 0 || !end_alive_[m]) continue;
    int face = f.face_of[m];
    if (!seen[face]) {
      seen[face] = true;
      p.value[face] = 0;
      q.push(face);
    }
  }
  while (!q.empty()) {
    int face = q.front();
    q.pop();
    for (int corner : f.corners[face]) {
      // The boundary dart leaves via sigma(corner); the current face is the
      // side of corner(pair(depart)). Crossing the strand from its left
      // side (corner of the out-end) to its right adds 1.
      int depart = sigma(corner);
      // Strand ends attached to the surface boundary block paths around
      // them; do not propagate across their edges.
      if (vertices[vert_of_[depart]].endpoint || vertices[vert_of_[pair_[depart]]].endpoint)
        continue;
      int other = f.face_of[depart];
      bool current_is_left = inward_[depart]; // out-end = pair(depart) then
      long long vb = p.value[face] + (current_is_left ? 1 : -1);
      if (!seen[other]) {
        seen[other] = true;
        p.value[other] = vb;
        q.push(other);
      } else {
        long long diff = p.value[other] - vb;
        if (mu_d == 0 ? diff != 0 : diff % mu_d != 0)
          throw ValidationError("face potential inconsistent");
      }
    }
  }
  return p;
}

long long SurfaceDiagram::corner_potential(const Faces& f, const Potentials& p, int end) const {
  long long v = p.value[f.face_of[end]];
  for (const auto& loop : free_loops) {
    if (loop.encloses.count(end)) v += loop.ccw ? -1 : 1;
  }
  return v;
}

std::vector<SurfaceDiagram::Strand> SurfaceDiagram::strands() const {
  std::vector<Strand> out;
  std::vector<bool> used(end_count(), false);
  auto follow = [&](int start_out, bool closed) {
    Strand s;
    s.closed = closed;
    int cur = start_out;
    while (true) {
      s.out_ends.push_back(cur);
      used[cur] = true;
      int arrive = pair_[cur];
      used[arrive] = true;
      const auto& v = vertices[vert_of_[arrive]];
      if (v.endpoint) break;
      cur = opposite(arrive);
      if (closed && cur == start_out) break;
      if (!closed && used[cur]) break;
    }
    return s;
  };
  // Long strands first: start at endpoint vertices whose single end is outgoing.
  for (int e = 0; e < end_count(); ++e) {
    if (!end_alive_[e] || used[e]) continue;
    const auto& v = vertices[vert_of_[e]];
    if (v.endpoint && !inward_[e]) out.push_back(follow(e, false));
  }
  for (int e = 0; e < end_count(); ++e) {
    if (!end_alive_[e] || used[e] || inward_[e]) continue;
    out.push_back(follow(e, true));
  }
  // Deterministic order: by least end id.
  std::sort(out.begin(), out.end(), [](const Strand& a, const Strand& b) {
    if (a.closed != b.closed) return !a.closed;
    return *std::min_element(a.out_ends.begin(), a.out_ends.end()) <
           *std::min_element(b.out_ends.begin(), b.out_ends.end());
  });
  return out;
}

int SurfaceDiagram::component_count() const {
  return (int)strands().size() + (int)free_loops.size();
}

HomClass SurfaceDiagram::strand_class(const Strand& s) const {
  HomClass h = hom_zero(surface.rank());
  for (int e : s.out_ends) h = hom_add(h, wall_[e]);
  return h;
}

HomClass SurfaceDiagram::total_class() const {
  HomClass h = hom_zero(surface.rank());
  for (auto& s : strands()) h = hom_add(h, strand_class(s));
  for (auto& l : free_loops) h = hom_add(h, l.hom);
  return h;
}

long long SurfaceDiagram::mu() const { return hom_mu(surface, total_class()); }

long long SurfaceDiagram::intersect(const ClosedWalk& x, const ClosedWalk& y) const {
  // Push x slightly to its left; count signed crossings with y near vertices.
  long long total = 0;
  for (const auto& vx : x) {
    int v = vert_of_[vx.in];
    int k = (int)vertices[v].rot.size();
    // Sweep ends clockwise strictly between in (A) and out (B).
    int a_slot = slot_of_[vx.in];
    int b_slot = slot_of_[vx.out];
    for (int s = (a_slot + k - 1) % k; s != b_slot; s = (s + k - 1) % k) {
      int g = vertices[v].rot[s];
      for (const auto& vy : y) {
        if (vy.in == g) total -= 1;
        if (vy.out == g) total += 1;
      }
    }
  }
  return total;
}

ClosedWalk SurfaceDiagram::walk_of_strand(const SurfaceDiagram& d, const Strand& s) {
  ClosedWalk w;
  int n = (int)s.out_ends.size();
  for (int i = 0; i < n; ++i) {
    int arrive = d.pair_[s.out_ends[i]];
    int next_out = s.out_ends[(i + 1) % n];
    w.push_back({arrive, next_out});
  }
  return w;
}

bool SurfaceDiagram::cellular() const {
  int chi = surface.closed() ? surface.chi_bar() : 2; // sphere model for bounded kinds
  if (surface.kind == Surface::Kind::Torus) chi = 0;
  int v = 0;
  for (auto& vx : vertices)
    if (!vx.rot.empty()) ++v;
  int e = edge_count();
  int f = (int)faces().corners.size();
  return v - e + f == chi;
}

SurfaceDiagram::SideAnalysis SurfaceDiagram::analyze_embedded(const ClosedWalk& w) const {
  SideAnalysis res;
  HomClass h = hom_zero(surface.rank());
  for (const auto& vis : w) h = hom_add(h, wall_[vis.out]);
  res.contractible = hom_is_zero(h);
  if (!res.contractible) return res;

  Faces f = faces();
  int nf = (int)f.corners.size();
  // Edges on the walk.
  std::set<int> walk_edge_ends;
  std::set<int> walk_vertices;
  for (const auto& vis : w) {
    walk_edge_ends.insert(vis.out);
    walk_edge_ends.insert(pair_[vis.out]);
    walk_vertices.insert(vert_of_[vis.in]);
  }
  // Left-side seed faces: corners swept on the left of each visit.
  // Left of travel leaving via end b is corner(b); entering via a it is
  // corner at the clockwise side of a, i.e. corner(sigma^{-1}(a)).
  std::set<int> left_faces, right_faces;
  for (const auto& vis : w) {
    left_faces.insert(f.face_of[vis.out]);
    right_faces.insert(f.face_of[sigma_inv(vis.out)]);
  }
  auto flood = [&](const std::set<int>& seed) {
    std::vector<bool> in(nf, false);
    std::queue<int> q;
    for (int s : seed) {
      if (!in[s]) {
        in[s] = true;
        q.push(s);
      }
    }
    while (!q.empty()) {
      int face = q.front();
      q.pop();
      for (int corner : f.corners[face]) {
        int depart = sigma(corner);
        if (walk_edge_ends.count(depart)) continue; // do not cross the walk
        int other = f.face_of[depart];
        if (!in[other]) {
          in[other] = true;
          q.push(other);
        }
      }
    }
    return in;
  };
  auto region_chi = [&](const std::vector<bool>& in) {
    // chi of the closed region (faces in `in`, walk as boundary).
    long long nfaces = 0;
    for (int i = 0; i < nf; ++i)
      if (in[i]) ++nfaces;
    // interior edges: both sides in region, not on the walk.
    std::set<int> counted;
    long long nedges = 0;
    for (int e2 = 0; e2 < end_count(); ++e2) {
      if (!end_alive_[e2] || counted.count(e2)) continue;
      counted.insert(e2);
      counted.insert(pair_[e2]);
      if (walk_edge_ends.count(e2)) continue;
      if (in[f.face_of[e2]] && in[f.face_of[pair_[e2]]]) ++nedges;
    }
    // interior vertices: all incident faces in the region and not on the walk.
    long long nverts = 0;
    for (int v = 0; v < (int)vertices.size(); ++v) {
      if (vertices[v].rot.empty()) continue;
      if (walk_vertices.count(v)) continue;
      bool inside = true;
      for (int e2 : vertices[v].rot)
        if (!in[f.face_of[e2]]) inside = false;
      if (inside) ++nverts;
    }
    return nverts - nedges + nfaces;
  };

  bool use_region_chi = surface.kind == Surface::Kind::Torus && cellular();
  if (!use_region_chi) {
    // Disk side = the side containing neither the marked base face nor any
    // face with essential boundary (annulus holes, hidden handles).
    auto left_in = flood(left_faces);
    bool left_marked = false;
    if (base_corner >= 0 && left_in[f.face_of[base_corner]]) left_marked = true;
    for (int m : outer_marks)
      if (m >= 0 && end_alive_[m] && left_in[f.face_of[m]]) left_marked = true;
    for (int face = 0; face < nf && !left_marked; ++face) {
      if (!left_in[face]) continue;
      HomClass sum = hom_zero(surface.rank());
      for (int corner : f.corners[face]) sum = hom_add(sum, wall_[sigma(corner)]);
      if (!hom_is_zero(sum)) left_marked = true;
    }
    res.ccw = !left_marked;
    return res;
  }
  auto left_in = flood(left_faces);
  res.ccw = region_chi(left_in) == 1;
  return res;
}

long long SurfaceDiagram::rot_of_tracked() const {
  if (!rot_valid) throw ValidationError("rotation number is not tracked for this diagram");
  return rot_tracked;
}

GaussCode SurfaceDiagram::to_gauss() const {
  GaussCode code;
  std::map<int, int> vertex_id; // crossing vertices -> id
  int next_id = 1;
  std::map<int, bool> flat_first_assigned;
  for (auto& s : strands()) {
    GaussCode::Component comp;
    comp.closed = s.closed;
    for (size_t i = 0; i < s.out_ends.size(); ++i) {
      int arrive = pair_[s.out_ends[i]];
      const auto& vx = vertices[vert_of_[arrive]];
      if (vx.endpoint) continue;
      int v = vert_of_[arrive];
      auto it = vertex_id.find(v);
      if (it == vertex_id.end()) it = vertex_id.emplace(v, next_id++).first;
      Role role;
      int sign;
      if (vx.flavor == Flavor::Classical) {
        role = is_over_end(arrive) ? Role::Over : Role::Under;
        sign = vertex_sign(v);
        code.crossings[it->second] = {sign, Flavor::Classical};
      } else {
        if (!flat_first_assigned[v]) {
          flat_first_assigned[v] = true;
          role = Role::Over;
          sign = vertex_sign_if_over(v, arrive);
          code.crossings[it->second] = {sign, vx.flavor};
        } else {
          role = Role::Under;
        }
      }
      comp.passages.push_back({it->second, role});
    }
    code.components.push_back(std::move(comp));
  }
  for (size_t i = 0; i < free_loops.size(); ++i) {
    GaussCode::Component comp;
    comp.closed = true;
    code.components.push_back(std::move(comp));
  }
  return code;
}

SurfaceDiagram SurfaceDiagram::mirror() const {
  SurfaceDiagram d = *this;
  for (auto& v : d.vertices)
    if (!v.endpoint && !v.rot.empty() && v.flavor == Flavor::Classical)
      v.over_slot = (v.over_slot + 1) % 4;
  return d;
}

SurfaceDiagram SurfaceDiagram::reversed() const {
  SurfaceDiagram d = *this;
  for (int e = 0; e < d.end_count(); ++e)
    if (d.end_alive_[e]) {
      d.inward_[e] = !d.inward_[e];
      d.wall_[e] = hom_neg(d.wall_[e]);
    }
  for (auto& l : d.free_loops) {
    l.hom = hom_neg(l.hom);
    l.ccw = !l.ccw;
  }
  d.rot_tracked = -d.rot_tracked;
  return d;
}

void SurfaceDiagram::validate() const {
  int rank = surface.rank();
  for (int e = 0; e < end_count(); ++e) {
    if (!end_alive_[e]) continue;
    if (pair_[e] == e || !end_alive_[pair_[e]] || pair_[pair_[e]] != e)
      throw ValidationError("edge pairing is not a fixed-point-free involution");
    if ((int)wall_[e].size() != rank) throw ValidationError("wall vector rank mismatch");
    HomClass sum = hom_add(wall_[e], wall_[pair_[e]]);
    if (!hom_is_zero(sum)) throw ValidationError("wall vectors not antisymmetric");
    const auto& v = vertices[vert_of_[e]];
    if (v.rot.empty()) throw ValidationError("end attached to a dead vertex");
    if (v.rot[slot_of_[e]] != e) throw ValidationError("slot table corrupt");
  }
  for (int vi = 0; vi < (int)vertices.size(); ++vi) {
    const auto& v = vertices[vi];
    if (v.rot.empty()) continue;
    if (v.endpoint) {
      if (v.rot.size() != 1) throw ValidationError("endpoint vertex must have one end");
      continue;
    }
    if (v.rot.size() != 4) throw ValidationError("crossing vertex must have four ends");
    for (int s = 0; s < 4; ++s) {
      int e = v.rot[s];
      int o = v.rot[(s + 2) % 4];
      if (inward_[e] == inward_[o])
        throw ValidationError("opposite ends must alternate in/out");
    }
  }
  // Face wall sums vanish on disk faces. Faces carrying the annulus holes
  // or a hidden torus handle have essential boundary; at most two such
  // faces may appear and their sums must cancel.
  Faces f = faces();
  {
    int nonzero = 0;
    HomClass total = hom_zero(rank);
    for (auto& cyc : f.corners) {
      HomClass sum = hom_zero(rank);
      for (int corner : cyc) sum = hom_add(sum, wall_[sigma(corner)]);
      if (!hom_is_zero(sum)) {
        ++nonzero;
        total = hom_add(total, sum);
      }
    }
    bool strict = surface.kind == Surface::Kind::Plane ||
                  surface.kind == Surface::Kind::Sphere ||
                  surface.kind == Surface::Kind::Abstract;
    if (strict && nonzero > 0) throw ValidationError("face wall sum nonzero");
    if (nonzero > 2 || !hom_is_zero(total))
      throw ValidationError("face wall sums inconsistent");
  }
  // Euler checks.
  int vcount = 0;
  for (auto& v : vertices)
    if (!v.rot.empty()) ++vcount;
  if (vcount > 0) {
    int chi = vcount - edge_count() + (int)f.corners.size();
    switch (surface.kind) {
      case Surface::Kind::Plane:
      case Surface::Kind::Sphere:
      case Surface::Kind::Annulus:
        if (chi != 2) throw ValidationError("Euler characteristic: expected V-E+F=2");
        break;
      case Surface::Kind::Torus:
        if (chi != 0 && chi != 2)
          throw ValidationError("Euler characteristic: expected V-E+F in {0,2} on the torus");
        break;
      case Surface::Kind::Abstract:
        break;
    }
  }
  // Free loops.
  for (auto& l : free_loops)
    if ((int)l.hom.size() != rank) throw ValidationError("free loop rank mismatch");
  // Potentials must be consistent (throws if not); Carter surfaces of
  // unconstrained genus carry no based-index structure.
  if (surface.kind != Surface::Kind::Abstract) (void)potentials(f);
}

SurfaceDiagram SurfaceDiagram::empty(Surface s) {
  SurfaceDiagram d;
  d.surface = s;
  return d;
}

SurfaceDiagram SurfaceDiagram::from_free_loop(Surface s, HomClass hom, bool ccw) {
  SurfaceDiagram d = empty(s);
  d.add_free_loop(std::move(hom), ccw);
  return d;
}

void SurfaceDiagram::add_free_loop(HomClass hom, bool ccw, int anchor) {
  FreeLoop l;
  l.hom = std::move(hom);
  l.ccw = ccw;
  l.anchor = anchor;
  if (hom_is_zero(l.hom)) rot_tracked += ccw ? 1 : -1;
  free_loops.push_back(std::move(l));
}

int SurfaceDiagram::new_end() {
  pair_.push_back(-1);
  vert_of_.push_back(-1);
  slot_of_.push_back(-1);
  inward_.push_back(false);
  wall_.push_back(hom_zero(surface.rank()));
  end_alive_.push_back(true);
  return end_count() - 1;
}

void SurfaceDiagram::kill_end(int e) { end_alive_[e] = false; }

void SurfaceDiagram::link_ends(int a, int b) {
  pair_[a] = b;
  pair_[b] = a;
}

void SurfaceDiagram::set_wall(int end, HomClass w) {
  wall_[pair_[end]] = hom_neg(w);
  wall_[end] = std::move(w);
}

} // namespace skein
