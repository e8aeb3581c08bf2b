#include "skein/invariants.hpp"

#include <algorithm>

namespace skein {

namespace {

long long mod_repr(long long v, long long m) {
  if (m == 0) return v;
  long long r = v % m;
  return r < 0 ? r + m : r;
}

// Virtually smooth the given crossings: returns the resulting closed curves
// as walks on the untouched map plus the surviving strand structure.
struct VirtualSmoothing {
  std::vector<ClosedWalk> circles;        // all-smoothed closed curves
  std::vector<HomClass> circle_classes;
  long long surviving_strands = 0;        // strands still passing a crossing
  std::vector<HomClass> strand_classes;   // their classes
};

VirtualSmoothing virtual_smooth(const SurfaceDiagram& d, const std::map<int, SmoothType>& types) {
  VirtualSmoothing out;
  std::map<int, Reconn> conn;
  for (auto& [v, t] : types) conn[v] = smoothing_pairs(d, v, t);
  std::vector<int> partner(d.end_count(), -1);
  for (auto& [v, rc] : conn)
    for (auto& [x, y] : rc.pairs) {
      partner[x] = y;
      partner[y] = x;
    }
  auto dissolved = [&](int v) { return conn.count(v) > 0; };
  std::vector<char> seen(d.end_count(), 0);

  auto step = [&](int out_end) {
    // returns next departure end
    int a = d.pair_[out_end];
    int v = d.vert_of_[a];
    if (d.vertices[v].endpoint) return -1;
    if (dissolved(v)) return partner[a];
    return d.opposite(a);
  };

  // Surviving strands: start at out-ends of surviving crossing vertices or endpoints.
  for (int e = 0; e < d.end_count(); ++e) {
    if (!d.end_alive_[e] || seen[e]) continue;
    int v = d.vert_of_[e];
    if (dissolved(v) || d.inward_[e]) continue;
    if (d.vertices[v].endpoint || !d.vertices[v].rot.empty()) {
      // walk
      HomClass h = hom_zero(d.surface.rank());
      int cur = e;
      bool walked = false;
      while (cur >= 0 && !seen[cur]) {
        walked = true;
        seen[cur] = 1;
        h = hom_add(h, d.wall_[cur]);
        int a = d.pair_[cur];
        seen[a] = 1; // block the reverse traversal of partially reversed strands
        cur = step(cur);
        if (cur == e) break;
      }
      if (walked) {
        out.surviving_strands++;
        out.strand_classes.push_back(h);
      }
    }
  }
  // Circles passing only dissolved vertices.
  for (int e0 = 0; e0 < d.end_count(); ++e0) {
    if (!d.end_alive_[e0] || seen[e0]) continue;
    if (!dissolved(d.vert_of_[e0])) continue;
    // prefer an out-end of the stored orientation
    int e = e0;
    {
      std::vector<int> members;
      int cur = e0;
      do {
        members.push_back(cur);
        members.push_back(d.pair_[cur]);
        cur = partner[d.pair_[cur]];
      } while (cur != e0 && !seen[cur]);
      for (int m : members)
        if (!d.inward_[m]) {
          e = m;
          break;
        }
    }
    ClosedWalk walk;
    HomClass h = hom_zero(d.surface.rank());
    int cur = e;
    while (!seen[cur]) {
      seen[cur] = 1;
      h = hom_add(h, d.wall_[cur]);
      int a = d.pair_[cur];
      seen[a] = 1;
      int nxt = partner[a];
      walk.push_back({a, nxt});
      cur = nxt;
    }
    out.circles.push_back(std::move(walk));
    out.circle_classes.push_back(std::move(h));
  }
  return out;
}

std::map<int, SmoothType> all_crossings(const SurfaceDiagram& d, SmoothType t) {
  std::map<int, SmoothType> m;
  for (int v = 0; v < (int)d.vertices.size(); ++v)
    if (!d.vertices[v].rot.empty() && !d.vertices[v].endpoint) m[v] = t;
  return m;
}

} // namespace

RotResult rot_after(const SurfaceDiagram& d, const std::map<int, SmoothType>& smooth) {
  // Complete the smoothing orientedly, then count contractible circles.
  std::map<int, SmoothType> types = smooth;
  for (auto& [v, t] : all_crossings(d, SmoothType::Or))
    if (!types.count(v)) types[v] = SmoothType::Or;
  VirtualSmoothing vs = virtual_smooth(d, types);
  RotResult r;
  for (size_t i = 0; i < vs.circles.size(); ++i) {
    if (!hom_is_zero(vs.circle_classes[i])) continue;
    r.rot_lift += d.analyze_embedded(vs.circles[i]).ccw ? 1 : -1;
  }
  for (auto& l : d.free_loops)
    if (hom_is_zero(l.hom)) r.rot_lift += l.ccw ? 1 : -1;
  r.rot = d.surface.chi_bar() > 0 ? mod_repr(r.rot_lift, d.surface.chi_bar()) : r.rot_lift;
  return r;
}

RotResult rot(const SurfaceDiagram& d) { return rot_after(d, {}); }

IndexPoly index_polynomial(const SurfaceDiagram& d) {
  IndexPoly out;
  out.mu = d.mu();
  Laurent p;
  auto idx = based_index(d);
  for (auto& [v, ind] : idx) {
    if (d.vertices[v].flavor != Flavor::Classical)
      throw ClassError("index polynomial needs classical crossings");
    p += Laurent::monomial(d.vertex_sign(v), ind);
  }
  out.p = p.reduced_mod(out.mu);
  return out;
}

UnorProfile unoriented_profile(const SurfaceDiagram& d) {
  return unoriented_profile_after(d, {});
}

SmoothedShape smoothed_shape(const SurfaceDiagram& d, const std::map<int, SmoothType>& smooth) {
  VirtualSmoothing vs = virtual_smooth(d, smooth);
  SmoothedShape s;
  s.total = hom_zero(d.surface.rank());
  for (auto& h : vs.circle_classes) s.total = hom_add(s.total, h);
  for (auto& h : vs.strand_classes) s.total = hom_add(s.total, h);
  for (auto& l : d.free_loops) s.total = hom_add(s.total, l.hom);
  s.components = (long long)vs.circles.size() + vs.surviving_strands + (long long)d.free_loops.size();
  return s;
}

UnorProfile unoriented_profile_after(const SurfaceDiagram& d,
                                     const std::map<int, SmoothType>& smooth) {
  UnorProfile out;
  // Unoriented based indices of surviving crossings come from the original map.
  auto ind_un = unoriented_based_index(d);
  for (auto& [v, val] : ind_un) {
    if (smooth.count(v)) continue;
    if (val == 1) out.n_odd++;
    else out.n_even++;
  }
  out.wr_odd = out.n_even - out.n_odd;
  // rho0 of the A-smoothing of the (partially smoothed) diagram.
  std::map<int, SmoothType> types = smooth;
  for (auto& [v, t] : all_crossings(d, SmoothType::A))
    if (!types.count(v)) types[v] = SmoothType::A;
  SmoothedShape sh = smoothed_shape(d, types);
  int rank = d.surface.rank();
  // section s: coordinatewise {0,1} lift of the mod-2 class
  HomClass lift = hom_zero(rank);
  for (int i = 0; i < rank; ++i) lift[i] = ((sh.total[i] % 2) + 2) % 2;
  long long pairing = hom_pair(d.surface, lift, sh.total);
  if (pairing % 2 != 0) throw ValidationError("rho0: odd self-pairing");
  out.rho0 = (int)mod_repr(pairing / 2 + sh.components, 2);
  out.rho = (int)((out.rho0 + out.n_odd) % 2);
  return out;
}

} // namespace skein
