#include "skein/map_moves.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace skein {

namespace {

struct VertexEnds {
  int in_a = -1, out_a = -1, in_b = -1, out_b = -1; // strand lines (0,2) and (1,3)
};

VertexEnds line_ends(const SurfaceDiagram& d, int v) {
  VertexEnds r;
  const auto& rot = d.vertices[v].rot;
  for (int s = 0; s < 4; ++s) {
    int e = rot[s];
    if (s % 2 == 0) (d.inward_[e] ? r.in_a : r.out_a) = e;
    else (d.inward_[e] ? r.in_b : r.out_b) = e;
  }
  return r;
}

// Determine walls of the listed edges from the face-sum-zero condition plus
// strand class constraints. Each unknown edge is given by one of its ends
// (the variable is the wall when leaving via that end). Gauge freedom is
// resolved by zeroing free variables.
void solve_unknown_walls(SurfaceDiagram& d, const std::vector<int>& unknown_ends,
                         const std::vector<std::pair<std::vector<int>, HomClass>>& class_rows,
                         const std::map<int, HomClass>& face_class_reps = {}) {
  int rank = d.surface.rank();
  int n = (int)unknown_ends.size();
  std::vector<int> var_of(d.end_count(), -1);
  for (int i = 0; i < n; ++i) {
    var_of[unknown_ends[i]] = i;
    var_of[d.pair_[unknown_ends[i]]] = i;
  }
  auto coeff_of = [&](int end) { return d.pair_[end] == unknown_ends[var_of[end]] ? -1 : 1; };

  struct Row {
    std::vector<long long> a;
    HomClass rhs;
  };
  std::vector<Row> rows;
  auto f = d.faces();
  for (auto& cyc : f.corners) {
    Row r;
    r.a.assign(n, 0);
    r.rhs = hom_zero(rank);
    bool touches = false;
    for (int corner : cyc) {
      auto it = face_class_reps.find(corner);
      if (it != face_class_reps.end()) r.rhs = hom_add(r.rhs, it->second);
      int depart = d.sigma(corner);
      if (var_of[depart] >= 0) {
        r.a[var_of[depart]] += coeff_of(depart);
        touches = true;
      } else {
        r.rhs = hom_add(r.rhs, hom_neg(d.wall_[depart]));
      }
    }
    if (touches) rows.push_back(std::move(r));
  }
  for (auto& [outs, cls] : class_rows) {
    Row r;
    r.a.assign(n, 0);
    r.rhs = cls;
    for (int u : outs) {
      if (var_of[u] >= 0) r.a[var_of[u]] += coeff_of(u);
      else r.rhs = hom_add(r.rhs, hom_neg(d.wall_[u]));
    }
    rows.push_back(std::move(r));
  }
  // Coordinatewise rational-free elimination: coefficients here stay small.
  std::vector<HomClass> solution(n, hom_zero(rank));
  std::vector<bool> solved(n, false);
  bool progress = true;
  std::vector<Row> work = rows;
  while (progress) {
    progress = false;
    for (auto& r : work) {
      int nz = -1, count = 0;
      for (int i = 0; i < n; ++i)
        if (r.a[i] != 0) {
          ++count;
          nz = i;
        }
      if (count == 1 && !solved[nz]) {
        if (std::abs(r.a[nz]) != 1) {
          bool divisible = true;
          for (auto c : r.rhs)
            if (c % r.a[nz] != 0) divisible = false;
          if (!divisible) throw ValidationError("wall solve: non-integral");
        }
        HomClass val = r.rhs;
        for (auto& c : val) c /= r.a[nz];
        solution[nz] = val;
        solved[nz] = true;
        for (auto& r2 : work) {
          if (r2.a[nz] != 0) {
            HomClass scaled = val;
            for (auto& c : scaled) c *= r2.a[nz];
            r2.rhs = hom_add(r2.rhs, hom_neg(scaled));
            r2.a[nz] = 0;
          }
        }
        progress = true;
      }
    }
    if (!progress) {
      // Eliminate a variable appearing in a multi-variable row against another.
      for (size_t i = 0; i < work.size() && !progress; ++i) {
        for (size_t j = i + 1; j < work.size() && !progress; ++j) {
          int pivot = -1;
          for (int k = 0; k < n; ++k)
            if (work[i].a[k] != 0 && work[j].a[k] != 0) pivot = k;
          if (pivot < 0) continue;
          long long ci = work[i].a[pivot], cj = work[j].a[pivot];
          Row combined;
          combined.a.assign(n, 0);
          combined.rhs = hom_zero(rank);
          for (int k = 0; k < n; ++k) combined.a[k] = work[i].a[k] * cj - work[j].a[k] * ci;
          HomClass ri = work[i].rhs, rj = work[j].rhs;
          for (auto& c : ri) c *= cj;
          for (auto& c : rj) c *= ci;
          combined.rhs = hom_add(ri, hom_neg(rj));
          bool nonzero = false;
          for (int k = 0; k < n; ++k)
            if (combined.a[k] != 0) nonzero = true;
          if (nonzero && work.size() < 96) {
            work.push_back(std::move(combined));
            progress = true;
          }
        }
      }
      // Stop when no new information can be derived.
      if (!progress) break;
    }
  }
  // Unsolved variables default to zero (gauge freedom).
  for (int i = 0; i < n; ++i) {
    int u = unknown_ends[i];
    d.wall_[u] = solution[i];
    d.wall_[d.pair_[u]] = hom_neg(solution[i]);
  }
  // Sanity: recheck face sums for the touched faces.
  auto f2 = d.faces();
  for (auto& cyc : f2.corners) {
    HomClass sum = hom_zero(rank);
    bool touches = false;
    for (int corner : cyc) {
      auto it = face_class_reps.find(corner);
      if (it != face_class_reps.end()) sum = hom_add(sum, hom_neg(it->second));
      int depart = d.sigma(corner);
      if (var_of[depart] >= 0) touches = true;
      sum = hom_add(sum, d.wall_[depart]);
    }
    if (touches && !hom_is_zero(sum)) throw ValidationError("wall solve failed: face sum nonzero");
  }
}

std::map<int, HomClass> essential_face_reps(const SurfaceDiagram& d) {
  std::map<int, HomClass> reps;
  auto f = d.faces();
  for (auto& cyc : f.corners) {
    HomClass sum = hom_zero(d.surface.rank());
    int rep = -1;
    for (int corner : cyc) {
      sum = hom_add(sum, d.wall_[d.sigma(corner)]);
      if (rep < 0 || corner < rep) rep = corner;
    }
    if (!hom_is_zero(sum)) reps[rep] = sum;
  }
  return reps;
}

} // namespace

Reconn smoothing_pairs(const SurfaceDiagram& d, int v, SmoothType t) {
  const auto& vx = d.vertices[v];
  if (t == SmoothType::A || t == SmoothType::B) {
    if (vx.flavor != Flavor::Classical)
      throw ClassError("A/B smoothing requires a classical crossing");
    // A-smoothing joins each over end to its ccw predecessor.
    int o1 = vx.rot[vx.over_slot];
    int o2 = vx.rot[(vx.over_slot + 2) % 4];
    if (t == SmoothType::A)
      return {{{{o1, d.sigma_inv(o1)}, {o2, d.sigma_inv(o2)}}}};
    return {{{{o1, d.sigma(o1)}, {o2, d.sigma(o2)}}}};
  }
  VertexEnds e = line_ends(d, v);
  if (t == SmoothType::Or) return {{{{e.in_a, e.out_b}, {e.in_b, e.out_a}}}};
  return {{{{e.in_a, e.in_b}, {e.out_a, e.out_b}}}};
}

Reconn identity_pairs(const SurfaceDiagram& d, int v) {
  VertexEnds e = line_ends(d, v);
  return {{{{e.in_a, e.out_a}, {e.in_b, e.out_b}}}};
}

void reconnect_vertices(SurfaceDiagram& d, const std::map<int, Reconn>& conn) {
  std::vector<int> partner(d.end_count(), -1);
  for (auto& [v, rc] : conn)
    for (auto& [x, y] : rc.pairs) {
      partner[x] = y;
      partner[y] = x;
    }
  auto dissolved = [&](int v) { return conn.count(v) > 0; };

  auto old_faces = d.faces();

  struct NewEdge {
    int from, to;
    HomClass wall;
  };
  std::vector<NewEdge> new_edges;
  struct FlagFix {
    int end;
    bool inward;
  };
  std::vector<FlagFix> flags;
  std::vector<char> consumed(d.end_count(), 0);

  auto chain = [&](int u, HomClass& wall_acc, std::vector<int>& interior) {
    int cur = u;
    while (true) {
      wall_acc = hom_add(wall_acc, d.wall_[cur]);
      int a = d.pair_[cur];
      if (!dissolved(d.vert_of_[a])) return a;
      interior.push_back(a);
      int nxt = partner[a];
      interior.push_back(nxt);
      cur = nxt;
    }
  };

  auto run_strand = [&](int start) {
    int u = start;
    while (true) {
      if (consumed[u]) break;
      consumed[u] = 1;
      flags.push_back({u, false});
      HomClass w = hom_zero(d.surface.rank());
      std::vector<int> interior;
      int arrive = chain(u, w, interior);
      for (int e : interior) consumed[e] = 1;
      flags.push_back({arrive, true});
      new_edges.push_back({u, arrive, std::move(w)});
      const auto& vx = d.vertices[d.vert_of_[arrive]];
      if (vx.endpoint) {
        consumed[arrive] = 1;
        break;
      }
      consumed[arrive] = 1;
      u = d.opposite(arrive);
      if (u == start) break;
    }
  };

  for (int e = 0; e < d.end_count(); ++e) {
    if (!d.end_alive_[e] || consumed[e]) continue;
    const auto& vx = d.vertices[d.vert_of_[e]];
    if (vx.endpoint && !d.inward_[e] && !dissolved(d.vert_of_[e])) run_strand(e);
  }
  for (int e = 0; e < d.end_count(); ++e) {
    if (!d.end_alive_[e] || consumed[e] || d.inward_[e]) continue;
    if (dissolved(d.vert_of_[e])) continue;
    run_strand(e);
  }
  for (int e = 0; e < d.end_count(); ++e) {
    if (!d.end_alive_[e] || consumed[e]) continue;
    if (dissolved(d.vert_of_[e])) continue;
    run_strand(e);
  }

  struct Circle {
    HomClass hom;
    bool ccw;
  };
  std::vector<Circle> circles;
  for (int e0 = 0; e0 < d.end_count(); ++e0) {
    if (!d.end_alive_[e0] || consumed[e0]) continue;
    // Traverse along the stored orientation when one exists.
    int e = e0;
    {
      std::vector<int> members;
      int cur = e0;
      do {
        members.push_back(cur);
        members.push_back(d.pair_[cur]);
        cur = partner[d.pair_[cur]];
      } while (cur != e0);
      for (int m : members)
        if (!d.inward_[m]) {
          e = m;
          break;
        }
    }
    ClosedWalk walk;
    HomClass hom = hom_zero(d.surface.rank());
    int cur = e;
    while (!consumed[cur]) {
      consumed[cur] = 1;
      hom = hom_add(hom, d.wall_[cur]);
      int a = d.pair_[cur];
      consumed[a] = 1;
      int nxt = partner[a];
      walk.push_back({a, nxt});
      cur = nxt;
    }
    bool ccw = true;
    if (hom_is_zero(hom)) ccw = d.analyze_embedded(walk).ccw;
    circles.push_back({std::move(hom), ccw});
  }

  for (auto& fl : flags) d.inward_[fl.end] = fl.inward;
  for (auto& ne : new_edges) {
    d.link_ends(ne.from, ne.to);
    d.wall_[ne.from] = ne.wall;
    d.wall_[ne.to] = hom_neg(ne.wall);
  }
  for (auto& [v, rc] : conn) {
    (void)rc;
    for (int e : d.vertices[v].rot) d.kill_end(e);
    d.vertices[v].rot.clear();
  }
  for (auto& c : circles) d.add_free_loop(std::move(c.hom), c.ccw);

  auto repair = [&](int end) {
    if (end < 0) return end;
    if (d.end_alive_[end]) return end;
    int face = old_faces.face_of[end];
    for (int c : old_faces.corners[face])
      if (d.end_alive_[c]) return c;
    for (int e = 0; e < d.end_count(); ++e)
      if (d.end_alive_[e]) return e;
    return -1;
  };
  d.base_corner = repair(d.base_corner);
  for (auto& l : d.free_loops) l.anchor = repair(l.anchor);
}

void smooth_at(SurfaceDiagram& d, int vertex, SmoothType t) {
  std::map<int, Reconn> conn;
  conn[vertex] = smoothing_pairs(d, vertex, t);
  reconnect_vertices(d, conn);
}

// --- Omega_1 ---------------------------------------------------------------

void map_o1_increase(SurfaceDiagram& d, int out_end, bool left_side, bool first_over) {
  if (d.inward_[out_end]) throw SiteError("kink insertion expects a strand out-end");
  int w = d.pair_[out_end];
  HomClass old_wall = d.wall_[out_end];

  int x = d.new_end(), y = d.new_end(), l1 = d.new_end(), l2 = d.new_end();
  SurfaceDiagram::Vertex vx;
  vx.flavor = Flavor::Classical;
  vx.rot = left_side ? std::vector<int>{x, y, l1, l2} : std::vector<int>{x, l2, l1, y};
  vx.over_slot = first_over ? 0 : 1;
  int v = (int)d.vertices.size();
  d.vertices.push_back(vx);
  for (int s = 0; s < 4; ++s) {
    int e = d.vertices[v].rot[s];
    d.vert_of_[e] = v;
    d.slot_of_[e] = s;
  }
  d.inward_[x] = true;
  d.inward_[l1] = false;
  d.inward_[l2] = true;
  d.inward_[y] = false;

  d.link_ends(out_end, x);
  d.link_ends(l1, l2);
  d.link_ends(y, w);
  d.wall_[out_end] = old_wall;
  d.wall_[x] = hom_neg(old_wall);
  d.wall_[l1] = hom_zero(d.surface.rank());
  d.wall_[l2] = hom_zero(d.surface.rank());
  d.wall_[y] = hom_zero(d.surface.rank());
  d.wall_[w] = hom_zero(d.surface.rank());
}

bool map_is_kink(const SurfaceDiagram& d, int vertex) {
  const auto& vx = d.vertices[vertex];
  if (vx.rot.size() != 4 || vx.endpoint) return false;
  for (int s = 0; s < 4; ++s) {
    int e = vx.rot[s];
    if (d.pair_[e] == vx.rot[(s + 1) % 4]) return true;
  }
  return false;
}

void map_o1_decrease(SurfaceDiagram& d, int vertex) {
  if (!map_is_kink(d, vertex)) throw SiteError("not a kink vertex");
  std::map<int, Reconn> conn;
  conn[vertex] = identity_pairs(d, vertex);
  reconnect_vertices(d, conn);
}

// --- Omega_2 ----------------------------------------------------------------

void map_o2_increase(SurfaceDiagram& d, int corner1, int corner2, bool poker_is_first,
                     bool poker_over, bool bend) {
  auto f = d.faces();
  if (f.face_of[corner1] != f.face_of[corner2] || corner1 == corner2)
    throw SiteError("omega2 increase needs two arcs of a common face");
  if (!poker_is_first) std::swap(corner1, corner2);
  int d1 = d.sigma(corner1), d2 = d.sigma(corner2);
  if (d1 == d2 || d.pair_[d1] == d2) throw SiteError("omega2 increase needs distinct edges");

  bool a_forward = !d.inward_[d1];
  bool b_forward = !d.inward_[d2];
  double dirB = b_forward ? -1.0 : 1.0; // face walk of arc2 runs downward
  double h_first = bend ? 0.5 : -0.5;
  double h_second = -h_first;

  int a_start = a_forward ? d1 : d.pair_[d1];
  int a_end = d.pair_[a_start];
  int b_start = b_forward ? d2 : d.pair_[d2];
  int b_end = d.pair_[b_start];

  std::map<int, HomClass> reps = essential_face_reps(d);
  // Strand classes before the move, for the wall solver.
  std::vector<std::pair<std::vector<int>, HomClass>> class_rows;
  {
    auto strands = d.strands();
    std::set<int> affected;
    for (size_t i = 0; i < strands.size(); ++i)
      for (int u : strands[i].out_ends)
        if (u == a_start || u == b_start) affected.insert((int)i);
    for (int i : affected) {
      class_rows.push_back({strands[i].out_ends, d.strand_class(strands[i])});
    }
  }

  struct NewVertexSpec {
    double ax, ay, bx, by;
    int a_in = -1, a_out = -1, b_in = -1, b_out = -1;
  };
  NewVertexSpec u{1, 0, 0, dirB};
  NewVertexSpec v{-1, 0, 0, dirB};
  auto build_vertex = [&](NewVertexSpec& s, bool a_over) {
    int vi = (int)d.vertices.size();
    SurfaceDiagram::Vertex vx;
    vx.flavor = Flavor::Classical;
    s.a_in = d.new_end();
    s.a_out = d.new_end();
    s.b_in = d.new_end();
    s.b_out = d.new_end();
    struct Item {
      double angle;
      int end;
      bool in;
      bool strand_a;
    };
    std::vector<Item> items = {
        {std::atan2(-s.ay, -s.ax), s.a_in, true, true},
        {std::atan2(s.ay, s.ax), s.a_out, false, true},
        {std::atan2(-s.by, -s.bx), s.b_in, true, false},
        {std::atan2(s.by, s.bx), s.b_out, false, false},
    };
    std::sort(items.begin(), items.end(),
              [](const Item& p, const Item& q) { return p.angle < q.angle; });
    vx.rot.resize(4);
    vx.over_slot = 0;
    for (int k = 0; k < 4; ++k) {
      vx.rot[k] = items[k].end;
      d.vert_of_[items[k].end] = vi;
      d.slot_of_[items[k].end] = k;
      d.inward_[items[k].end] = items[k].in;
      if (items[k].strand_a == a_over && items[k].in) vx.over_slot = k;
    }
    d.vertices.push_back(vx);
    return vi;
  };
  build_vertex(u, poker_over);
  build_vertex(v, poker_over);

  d.link_ends(a_start, u.a_in);
  d.link_ends(u.a_out, v.a_in);
  d.link_ends(v.a_out, a_end);

  bool u_first = b_forward ? (h_first > h_second) : (h_first < h_second);
  const NewVertexSpec& first = u_first ? u : v;
  const NewVertexSpec& second = u_first ? v : u;
  d.link_ends(b_start, first.b_in);
  d.link_ends(first.b_out, second.b_in);
  d.link_ends(second.b_out, b_end);

  for (int e : {a_start, u.a_out, v.a_out, b_start, first.b_out, second.b_out}) {
    d.wall_[e] = hom_zero(d.surface.rank());
    d.wall_[d.pair_[e]] = hom_zero(d.surface.rank());
  }
  solve_unknown_walls(d, {a_start, u.a_out, v.a_out, b_start, first.b_out, second.b_out},
                      class_rows, reps);
}

bool map_is_o2_bigon(const SurfaceDiagram& d, int corner, bool require_classical) {
  auto f = d.faces();
  const auto& cyc = f.corners[f.face_of[corner]];
  if (cyc.size() != 2) return false;
  int c1 = cyc[0], c2 = cyc[1];
  int v1 = d.vert_of_[c1], v2 = d.vert_of_[c2];
  if (v1 == v2) return false;
  if (d.vertices[v1].endpoint || d.vertices[v2].endpoint) return false;
  if (!require_classical)
    return d.vertices[v1].flavor == Flavor::Flat && d.vertices[v2].flavor == Flavor::Flat;
  if (d.vertices[v1].flavor != Flavor::Classical || d.vertices[v2].flavor != Flavor::Classical)
    return false;
  int e1 = d.sigma(c1);
  bool a_over = d.is_over_end(e1) && d.is_over_end(d.pair_[e1]);
  int e2 = d.sigma(c2);
  bool b_over = d.is_over_end(e2) && d.is_over_end(d.pair_[e2]);
  return a_over != b_over;
}

void map_o2_decrease(SurfaceDiagram& d, int corner) {
  auto f = d.faces();
  const auto& cyc = f.corners[f.face_of[corner]];
  if (cyc.size() != 2) throw SiteError("not a bigon face");
  int v1 = d.vert_of_[cyc[0]], v2 = d.vert_of_[cyc[1]];
  if (v1 == v2) throw SiteError("degenerate bigon");
  std::map<int, Reconn> conn;
  conn[v1] = identity_pairs(d, v1);
  conn[v2] = identity_pairs(d, v2);
  reconnect_vertices(d, conn);
}

// --- Omega_3 / Delta ---------------------------------------------------------

TriangleSite map_triangle_at(const SurfaceDiagram& d, int corner) {
  TriangleSite site;
  auto f = d.faces();
  const auto& cyc = f.corners[f.face_of[corner]];
  if (cyc.size() != 3) return site;
  for (int i = 0; i < 3; ++i) {
    site.corners[i] = cyc[i];
    site.vertices[i] = d.vert_of_[cyc[i]];
    const auto& vx = d.vertices[site.vertices[i]];
    if (vx.endpoint || vx.rot.size() != 4) return site;
  }
  if (site.vertices[0] == site.vertices[1] || site.vertices[1] == site.vertices[2] ||
      site.vertices[0] == site.vertices[2])
    return site;
  site.valid = true;
  bool all_pos = true;
  int side_over[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    int vtx = site.vertices[i];
    if (d.vertices[vtx].flavor == Flavor::Classical) {
      if (d.vertex_sign(vtx) != 1) all_pos = false;
    } else {
      all_pos = false;
    }
    // side i departs via sigma(corners[i]) at vertex i and arrives at
    // corners[i+1] at vertex i+1.
    int dep = d.sigma(site.corners[i]);
    int arr = site.corners[(i + 1) % 3];
    if (d.pair_[dep] != arr) {
      site.valid = false;
      return site;
    }
    if (d.is_over_end(dep)) side_over[i]++;
    if (d.is_over_end(arr)) side_over[i]++;
  }
  bool classical = true;
  for (int i = 0; i < 3; ++i)
    if (d.vertices[site.vertices[i]].flavor != Flavor::Classical) classical = false;
  if (classical)
    site.acyclic = !(side_over[0] == 1 && side_over[1] == 1 && side_over[2] == 1);
  else
    site.acyclic = true;
  site.all_positive = all_pos && classical;
  return site;
}

void map_o3_move(SurfaceDiagram& d, const TriangleSite& site) {
  if (!site.valid) throw SiteError("not a triangle site");
  // Gauge the side walls to zero.
  HomClass w01 = d.wall_[d.sigma(site.corners[0])];
  HomClass w12 = d.wall_[d.sigma(site.corners[1])];
  vertex_gauge(d, site.vertices[1], hom_neg(w01));
  vertex_gauge(d, site.vertices[2], hom_neg(hom_add(w01, w12)));

  struct SidePlan {
    int X, Y;              // outer ends: X enters the strand's first vertex
    int sx, sy;            // side ends at X's vertex and Y's vertex
    int x_vert_new, x_slot_new;
    int y_vert_new, y_slot_new;
    int sx_slot_new, sy_slot_new;
  };
  std::array<SidePlan, 3> plan;
  for (int i = 0; i < 3; ++i) {
    int s1 = d.sigma(site.corners[i]);        // at Vi
    int s2 = site.corners[(i + 1) % 3];       // at Vi+1
    int vi = site.vertices[i];
    int vj = site.vertices[(i + 1) % 3];
    int outer_i = d.vertices[vi].rot[(d.slot_of_[s1] + 2) % 4];
    int outer_j = d.vertices[vj].rot[(d.slot_of_[s2] + 2) % 4];
    bool s1_out = !d.inward_[s1]; // side runs Vi -> Vj along its strand
    SidePlan p;
    if (s1_out) {
      p.X = outer_i;
      p.Y = outer_j;
      p.sx = s1;
      p.sy = s2;
      p.x_vert_new = vj;
      p.x_slot_new = d.slot_of_[s2];
      p.y_vert_new = vi;
      p.y_slot_new = d.slot_of_[s1];
      p.sx_slot_new = d.slot_of_[outer_i]; // sx stays at vi
      p.sy_slot_new = d.slot_of_[outer_j];
    } else {
      p.X = outer_j;
      p.Y = outer_i;
      p.sx = s2;
      p.sy = s1;
      p.x_vert_new = vi;
      p.x_slot_new = d.slot_of_[s1];
      p.y_vert_new = vj;
      p.y_slot_new = d.slot_of_[s2];
      p.sx_slot_new = d.slot_of_[outer_j];
      p.sy_slot_new = d.slot_of_[outer_i];
    }
    plan[i] = p;
  }
  for (auto& p : plan) {
    int sx_vert = d.vert_of_[p.sx];
    int sy_vert = d.vert_of_[p.sy];
    d.vertices[p.x_vert_new].rot[p.x_slot_new] = p.X;
    d.vert_of_[p.X] = p.x_vert_new;
    d.vertices[p.y_vert_new].rot[p.y_slot_new] = p.Y;
    d.vert_of_[p.Y] = p.y_vert_new;
    d.vertices[sx_vert].rot[p.sx_slot_new] = p.sx;
    d.vertices[sy_vert].rot[p.sy_slot_new] = p.sy;
    d.inward_[p.sx] = true;  // side now arrives where X entered
    d.inward_[p.sy] = false; // and departs from Y's old vertex
  }
  // Slot table rebuild for the six vertices' ends.
  for (int i = 0; i < 3; ++i) {
    int v = site.vertices[i];
    for (int s = 0; s < 4; ++s) d.slot_of_[d.vertices[v].rot[s]] = s;
  }
}

void map_cc(SurfaceDiagram& d, int vertex) {
  auto& vx = d.vertices[vertex];
  if (vx.flavor != Flavor::Classical)
    throw ClassError("crossing change needs a classical crossing");
  vx.over_slot = (vx.over_slot + 1) % 4;
}

// --- band surgery -------------------------------------------------------------

bool map_surgery_oriented(const SurfaceDiagram& d, int corner1, int corner2) {
  int d1 = d.sigma(corner1), d2 = d.sigma(corner2);
  return d.inward_[d1] == d.inward_[d2];
}

void map_surgery(SurfaceDiagram& d, int corner1, int corner2, bool with_circle) {
  auto f = d.faces();
  if (f.face_of[corner1] != f.face_of[corner2] || corner1 == corner2)
    throw SiteError("surgery needs two arcs of a common face");
  int d1 = d.sigma(corner1), d2 = d.sigma(corner2);
  if (d1 == d2 || d.pair_[d1] == d2) throw SiteError("surgery needs distinct edges");
  int a1 = d1, b1 = d.pair_[d1];
  int a2 = d2, b2 = d.pair_[d2];
  bool oriented = d.inward_[a1] == d.inward_[a2];

  std::map<int, HomClass> reps = essential_face_reps(d);
  HomClass total = d.total_class();
  for (auto& l : d.free_loops) total = hom_add(total, hom_neg(l.hom));

  d.link_ends(a1, b2);
  d.link_ends(a2, b1);
  d.wall_[a1] = hom_zero(d.surface.rank());
  d.wall_[b2] = hom_zero(d.surface.rank());
  d.wall_[a2] = hom_zero(d.surface.rank());
  d.wall_[b1] = hom_zero(d.surface.rank());
  if (!oriented) {
    for (auto& s : d.strands()) {
      for (int u : s.out_ends) {
        d.inward_[u] = false;
        d.inward_[d.pair_[u]] = true;
      }
    }
  }
  // Total strand class is preserved by the surgery.
  std::vector<int> all_outs;
  for (auto& s : d.strands())
    for (int u : s.out_ends) all_outs.push_back(u);
  solve_unknown_walls(d, {a1, a2}, {{all_outs, total}}, reps);
  if (with_circle) d.add_free_loop(hom_zero(d.surface.rank()), true, corner1);
}

int promote_free_loop(SurfaceDiagram& d, int loop_index, bool left_side, bool first_over) {
  FreeLoop loop = d.free_loops[loop_index];
  d.free_loops.erase(d.free_loops.begin() + loop_index);
  int x = d.new_end(), y = d.new_end(), l1 = d.new_end(), l2 = d.new_end();
  SurfaceDiagram::Vertex vx;
  vx.flavor = Flavor::Classical;
  vx.rot = left_side ? std::vector<int>{x, y, l1, l2} : std::vector<int>{x, l2, l1, y};
  vx.over_slot = first_over ? 0 : 1;
  int v = (int)d.vertices.size();
  d.vertices.push_back(vx);
  for (int s = 0; s < 4; ++s) {
    int e = d.vertices[v].rot[s];
    d.vert_of_[e] = v;
    d.slot_of_[e] = s;
  }
  d.inward_[x] = true;
  d.inward_[l1] = false;
  d.inward_[l2] = true;
  d.inward_[y] = false;
  d.link_ends(l1, l2);
  d.link_ends(y, x);
  d.wall_[l1] = hom_zero(d.surface.rank());
  d.wall_[l2] = hom_zero(d.surface.rank());
  d.wall_[y] = loop.hom;
  d.wall_[x] = hom_neg(loop.hom);
  return v;
}

void vertex_gauge(SurfaceDiagram& d, int vertex, const HomClass& delta) {
  for (int e : d.vertices[vertex].rot) {
    d.wall_[e] = hom_add(d.wall_[e], hom_neg(delta));
    d.wall_[d.pair_[e]] = hom_add(d.wall_[d.pair_[e]], delta);
  }
}

} // namespace skein
