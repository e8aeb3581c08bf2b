#include "skein/carter.hpp"

namespace skein {

namespace {

struct VertexEnds {
  int o_in = -1, o_out = -1, u_in = -1, u_out = -1;
};

} // namespace

SurfaceDiagram carter_surface_linked(const GaussCode& code, CodeMapLink& link) {
  code.validate();
  SurfaceDiagram d = SurfaceDiagram::empty(Surface::abstract_surface());
  std::map<int, VertexEnds> ends;
  for (auto& [id, info] : code.crossings) {
    VertexEnds e;
    e.o_in = d.new_end();
    e.o_out = d.new_end();
    e.u_in = d.new_end();
    e.u_out = d.new_end();
    SurfaceDiagram::Vertex vx;
    vx.flavor = info.flavor;
    // ccw rotation: sign+ gives (U_out, O_in, U_in, O_out),
    //               sign- gives (U_out, O_out, U_in, O_in).
    if (info.sign > 0) vx.rot = {e.u_out, e.o_in, e.u_in, e.o_out};
    else vx.rot = {e.u_out, e.o_out, e.u_in, e.o_in};
    vx.over_slot = 1; // over strand occupies the odd slots in both layouts
    int v = (int)d.vertices.size();
    d.vertices.push_back(vx);
    for (int s = 0; s < 4; ++s) {
      int end = d.vertices[v].rot[s];
      d.vert_of_[end] = v;
      d.slot_of_[end] = s;
    }
    d.inward_[e.o_in] = true;
    d.inward_[e.u_in] = true;
    d.inward_[e.o_out] = false;
    d.inward_[e.u_out] = false;
    ends[id] = e;
    link.vertex_of_crossing[id] = v;
  }

  auto in_end = [&](const Passage& p) {
    return p.role == Role::Over ? ends[p.crossing].o_in : ends[p.crossing].u_in;
  };
  auto out_end = [&](const Passage& p) {
    return p.role == Role::Over ? ends[p.crossing].o_out : ends[p.crossing].u_out;
  };

  std::map<int, int> seen;
  for (auto& comp : code.components) {
    int n = (int)comp.passages.size();
    if (n == 0) {
      d.add_free_loop(hom_zero(0), true);
      continue;
    }
    for (int i = 0; i < n; ++i) {
      const auto& p = comp.passages[i];
      if (seen[p.crossing]++ == 0) link.passage_ends[p.crossing].first = in_end(p);
      else link.passage_ends[p.crossing].second = in_end(p);
      bool last = i + 1 == n;
      if (!comp.closed && last) {
        // terminal endpoint vertex
        int t = d.new_end();
        SurfaceDiagram::Vertex vx;
        vx.endpoint = true;
        vx.rot = {t};
        int v = (int)d.vertices.size();
        d.vertices.push_back(vx);
        d.vert_of_[t] = v;
        d.slot_of_[t] = 0;
        d.inward_[t] = true;
        d.link_ends(out_end(p), t);
        d.wall_[out_end(p)] = hom_zero(0);
        d.wall_[t] = hom_zero(0);
        continue;
      }
      const auto& q = comp.passages[(i + 1) % n];
      d.link_ends(out_end(p), in_end(q));
      d.wall_[out_end(p)] = hom_zero(0);
      d.wall_[in_end(q)] = hom_zero(0);
    }
    if (!comp.closed) {
      // initial endpoint vertex
      int s0 = d.new_end();
      SurfaceDiagram::Vertex vx;
      vx.endpoint = true;
      vx.rot = {s0};
      int v = (int)d.vertices.size();
      d.vertices.push_back(vx);
      d.vert_of_[s0] = v;
      d.slot_of_[s0] = 0;
      d.inward_[s0] = false;
      d.link_ends(s0, in_end(comp.passages[0]));
      d.wall_[s0] = hom_zero(0);
      d.wall_[in_end(comp.passages[0])] = hom_zero(0);
    }
  }
  return d;
}

SurfaceDiagram carter_surface(const GaussCode& code) {
  CodeMapLink link;
  return carter_surface_linked(code, link);
}

int map_genus(const SurfaceDiagram& d) {
  int v = 0;
  for (auto& vx : d.vertices)
    if (!vx.rot.empty()) ++v;
  if (v == 0) return 0;
  int chi = v - d.edge_count() + (int)d.faces().corners.size();
  return (2 - chi) / 2;
}

SurfaceDiagram plane_diagram(const GaussCode& code, Surface surface, int outer_corner) {
  CodeMapLink link;
  SurfaceDiagram d = carter_surface_linked(code, link);
  if (map_genus(d) != 0)
    throw ClassError("code is not planar: Carter genus " + std::to_string(map_genus(d)));
  d.surface = surface;
  if (d.end_count() > 0) {
    if (outer_corner < 0) {
      // Corner clockwise of the first crossing's first in-end.
      int e = link.passage_ends.begin()->second.first;
      outer_corner = d.sigma_inv(e);
    }
    d.base_corner = outer_corner;
  }
  return d;
}

ClosedWalk half_walk(const SurfaceDiagram& d, const CodeMapLink& link, int crossing,
                     bool first_to_second) {
  auto [in1, in2] = link.passage_ends.at(crossing);
  int start_in = first_to_second ? in1 : in2;
  int end_in = first_to_second ? in2 : in1;
  ClosedWalk walk;
  int out = d.opposite(start_in);
  walk.push_back({end_in, out});
  while (true) {
    int a = d.pair_[out];
    if (a == end_in) break;
    walk.push_back({a, d.opposite(a)});
    out = d.opposite(a);
  }
  return walk;
}

bool first_half_is_left(const SurfaceDiagram& d, const CodeMapLink& link, int crossing) {
  auto [in1, in2] = link.passage_ends.at(crossing);
  int out1 = d.opposite(in1);
  int out2 = d.opposite(in2);
  return d.slot_of_[out1] == (d.slot_of_[out2] + 1) % 4;
}

} // namespace skein
