#include "skein/corpus.hpp"

#include <deque>
#include <random>
#include <unordered_set>

#include "skein/carter.hpp"
#include "skein/map_moves.hpp"

namespace skein {

SurfaceDiagram plane_circle(bool ccw) {
  return SurfaceDiagram::from_free_loop(Surface::plane(), {}, ccw);
}

SurfaceDiagram kinked_circle_map(bool left_side, bool first_over) {
  SurfaceDiagram d = plane_circle(true);
  promote_free_loop(d, 0, left_side, first_over);
  d.base_corner = 0; // corner of x: the outer face
  return d;
}

SurfaceDiagram infinity_map(int k, int eps) {
  // A right kink on the circle opposes its rotation, leaving the
  // figure-eight with rotation number zero; the kink is positive when the
  // over strand comes first.
  SurfaceDiagram d = SurfaceDiagram::from_free_loop(Surface::plane(), {}, true);
  promote_free_loop(d, 0, false, eps > 0);
  // ends: x=0 (in), y=1 (out), l1=2, l2=3; outer corner at x.
  d.base_corner = 0;
  // enclosing circles: negative orientation for k > 0
  int n = std::abs(k);
  for (int i = 0; i < n; ++i) {
    FreeLoop enclosing;
    enclosing.hom = {};
    enclosing.ccw = k < 0;
    enclosing.anchor = 0;
    enclosing.encloses = {0, 1, 2, 3};
    d.free_loops.push_back(enclosing);
    d.add_free_loop({}, k >= 0); // detached compensating circle
  }
  return d;
}

SurfaceDiagram f_infinity_map(const Laurent& f) {
  SurfaceDiagram out = SurfaceDiagram::empty(Surface::plane());
  bool first = true;
  for (auto& [exp, coeff] : f.coeffs()) {
    for (long long i = 0; i < std::llabs(coeff); ++i) {
      SurfaceDiagram inf = infinity_map((int)exp, coeff > 0 ? 1 : -1);
      out = map_disjoint_union(out, inf);
      if (first) {
        out.base_corner = 0;
        first = false;
      }
    }
  }
  if (out.end_count() == 0) out.base_corner = -1;
  return out;
}

SurfaceDiagram map_disjoint_union(const SurfaceDiagram& a, const SurfaceDiagram& b) {
  SurfaceDiagram d = a;
  int offset = a.end_count();
  int voffset = (int)a.vertices.size();
  for (auto& vx : b.vertices) {
    SurfaceDiagram::Vertex v = vx;
    for (auto& e : v.rot) e += offset;
    d.vertices.push_back(v);
  }
  for (int e = 0; e < b.end_count(); ++e) {
    d.pair_.push_back(b.pair_[e] + offset);
    d.vert_of_.push_back(b.vert_of_[e] + voffset);
    d.slot_of_.push_back(b.slot_of_[e]);
    d.inward_.push_back(b.inward_[e]);
    d.wall_.push_back(b.wall_[e]);
    d.end_alive_.push_back(b.end_alive_[e]);
  }
  for (auto& l : b.free_loops) {
    FreeLoop copy = l;
    if (copy.anchor >= 0) copy.anchor += offset;
    std::set<int> enc;
    for (int e : copy.encloses) enc.insert(e + offset);
    copy.encloses = std::move(enc);
    d.free_loops.push_back(copy);
  }
  for (int m : b.outer_marks) d.outer_marks.push_back(m + offset);
  if (d.base_corner < 0) d.base_corner = b.base_corner >= 0 ? b.base_corner + offset : -1;
  else if (b.base_corner >= 0) d.outer_marks.push_back(b.base_corner + offset);
  return d;
}

SurfaceDiagram torus_rose(int sign) {
  SurfaceDiagram d = SurfaceDiagram::empty(Surface::torus());
  int a_in = d.new_end(), b_in = d.new_end(), a_out = d.new_end(), b_out = d.new_end();
  SurfaceDiagram::Vertex vx;
  vx.flavor = Flavor::Classical;
  vx.rot = {a_in, b_in, a_out, b_out};
  vx.over_slot = sign > 0 ? 1 : 0;
  d.vertices.push_back(vx);
  for (int s = 0; s < 4; ++s) {
    d.vert_of_[vx.rot[s]] = 0;
    d.slot_of_[vx.rot[s]] = s;
  }
  d.inward_[a_in] = true;
  d.inward_[b_in] = true;
  d.link_ends(a_out, a_in);
  d.link_ends(b_out, b_in);
  d.set_wall(a_out, {1, 0});
  d.set_wall(b_out, {0, 1});
  d.base_corner = a_in;
  return d;
}

SurfaceDiagram torus_loop(long long p, long long q) {
  return SurfaceDiagram::from_free_loop(Surface::torus(), {p, q}, true);
}

SurfaceDiagram annulus_loop(long long winding) {
  return SurfaceDiagram::from_free_loop(Surface::annulus(), {winding}, true);
}

std::vector<GaussCode> generate_code_corpus(const std::vector<GaussCode>& seeds,
                                            const KnotTheory& theory, const CorpusOptions& opts) {
  std::vector<GaussCode> out;
  std::unordered_set<std::string> seen;
  std::mt19937_64 rng(opts.seed);
  auto add = [&](const GaussCode& c) {
    if ((int)out.size() >= opts.max_diagrams) return;
    std::string key = c.canonical_string();
    if (seen.count(key)) return;
    seen.insert(key);
    out.push_back(c.normalized());
  };
  for (auto& s : seeds) add(s);
  for (auto& s : seeds) {
    for (int w = 0; w < opts.walks_per_seed; ++w) {
      GaussCode cur = s;
      for (int step = 0; step < opts.walk_length; ++step) {
        FindOptions fo;
        fo.decreasing = true;
        fo.neutral = true;
        fo.increasing = cur.crossing_count() + 2 <= opts.max_crossings;
        fo.increasing_cap = 32;
        std::vector<MoveSite> sites;
        try {
          sites = find_moves(cur, theory, fo);
        } catch (const ClassError&) {
          break;
        }
        if (sites.empty()) break;
        // try a few random sites until one applies (and stays planar if asked)
        bool moved = false;
        for (int attempt = 0; attempt < 8 && !moved; ++attempt) {
          const MoveSite& site = sites[rng() % sites.size()];
          try {
            GaussCode next = apply_move(cur, site).code;
            if (opts.planar_only && map_genus(carter_surface(next)) != 0) continue;
            cur = std::move(next);
            moved = true;
          } catch (const SiteError&) {
          }
        }
        if (!moved) break;
        if (cur.crossing_count() <= opts.max_crossings) add(cur);
        if ((int)out.size() >= opts.max_diagrams) return out;
      }
    }
  }
  return out;
}

SurfaceDiagram random_map_walk(const SurfaceDiagram& seed, int steps, uint64_t seed_value,
                               const MapWalkOptions& opts) {
  SurfaceDiagram d = seed;
  std::mt19937_64 rng(seed_value);
  for (int step = 0; step < steps; ++step) {
    // catalogue available map moves
    struct Choice {
      int kind; // 0 o1inc, 1 o1dec, 2 o2inc, 3 o2dec, 4 o3, 5 promote
      int a = 0, b = 0, c = 0, e = 0;
    };
    std::vector<Choice> choices;
    auto f = d.faces();
    int ncross = 0;
    for (int v = 0; v < (int)d.vertices.size(); ++v)
      if (!d.vertices[v].rot.empty() && !d.vertices[v].endpoint) ++ncross;
    bool can_grow = ncross + 2 <= opts.crossing_cap;
    if (opts.allow_o1)
      for (int v = 0; v < (int)d.vertices.size(); ++v) {
        if (d.vertices[v].rot.empty() || d.vertices[v].endpoint) continue;
        if (map_is_kink(d, v)) choices.push_back({1, v});
      }
    for (size_t face = 0; face < f.corners.size(); ++face) {
      auto& cyc = f.corners[face];
      if (cyc.size() == 2 && map_is_o2_bigon(d, cyc[0], !opts.allow_flat))
        choices.push_back({3, cyc[0]});
      if (cyc.size() == 3 && opts.allow_o3) {
        TriangleSite tri = map_triangle_at(d, cyc[0]);
        if (tri.valid && tri.acyclic) choices.push_back({4, cyc[0]});
      }
      if (can_grow) {
        for (size_t i = 0; i < cyc.size(); ++i)
          for (size_t j = 0; j < cyc.size(); ++j) {
            if (i == j) continue;
            int d1 = d.sigma(cyc[i]), d2 = d.sigma(cyc[j]);
            if (d1 == d2 || d.pair_[d1] == d2) continue;
            choices.push_back({2, cyc[i], cyc[j], (int)(rng() % 8)});
          }
      }
    }
    if (ncross + 1 <= opts.crossing_cap && opts.allow_o1) {
      for (int e = 0; e < d.end_count(); ++e)
        if (d.end_alive_[e] && !d.inward_[e]) choices.push_back({0, e, (int)(rng() % 4)});
      if (!d.free_loops.empty())
        choices.push_back({5, (int)(rng() % d.free_loops.size()), (int)(rng() % 4)});
    }
    if (choices.empty()) break;
    Choice ch = choices[rng() % choices.size()];
    SurfaceDiagram backup = d;
    try {
      switch (ch.kind) {
        case 0: map_o1_increase(d, ch.a, ch.b & 1, ch.b & 2); break;
        case 1: map_o1_decrease(d, ch.a); break;
        case 2: map_o2_increase(d, ch.a, ch.b, ch.c & 1, ch.c & 2, ch.c & 4); break;
        case 3: map_o2_decrease(d, ch.a); break;
        case 4: map_o3_move(d, map_triangle_at(d, ch.a)); break;
        case 5: promote_free_loop(d, ch.a, ch.b & 1, ch.b & 2); break;
      }
      d.validate();
    } catch (const std::exception&) {
      d = backup;
    }
  }
  return d;
}

} // namespace skein
