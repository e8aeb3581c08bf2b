#include "skein/moves.hpp"

#include <algorithm>
#include <sstream>

#include "skein/carter.hpp"
#include "skein/map_moves.hpp"

namespace skein {

std::string move_tag_name(MoveTag t) {
  switch (t) {
    case MoveTag::Omega1a: return "o1a";
    case MoveTag::Omega1b: return "o1b";
    case MoveTag::Omega2a: return "o2a";
    case MoveTag::Omega2b: return "o2b";
    case MoveTag::Omega2c: return "o2c";
    case MoveTag::Omega2d: return "o2d";
    case MoveTag::Omega3b: return "o3b";
    case MoveTag::Omega3o: return "o3o";
    case MoveTag::VOmega1: return "vo1";
    case MoveTag::VOmega2: return "vo2";
    case MoveTag::VOmega3: return "vo3";
    case MoveTag::SVOmega3: return "svo3";
    case MoveTag::CC: return "cc";
    case MoveTag::Delta: return "delta";
    case MoveTag::Clasp: return "clasp";
    case MoveTag::Flank: return "flank";
    case MoveTag::ForbiddenO: return "fo";
    case MoveTag::ForbiddenU: return "fu";
    case MoveTag::ForbiddenM: return "fm";
    case MoveTag::SmOr: return "sm-or";
    case MoveTag::SmUnor: return "sm-unor";
    case MoveTag::SmA: return "sm-a";
    case MoveTag::SmB: return "sm-b";
    case MoveTag::CircleO1: return "o-circ";
    case MoveTag::CircleODelta: return "o-delta";
    case MoveTag::H2: return "h2";
    case MoveTag::H2o: return "h2o";
    case MoveTag::TwoOmegaInf: return "2o-inf";
  }
  return "?";
}

std::string MoveSite::str() const {
  std::ostringstream out;
  out << move_tag_name(tag);
  out << (dir == Direction::Increasing ? "+" : dir == Direction::Decreasing ? "-" : "=");
  out << "@";
  bool first = true;
  for (int c : crossings) {
    if (!first) out << ",";
    out << "c" << c;
    first = false;
  }
  for (auto& g : gaps) {
    if (!first) out << ",";
    out << "g" << g.comp << "." << g.idx;
    first = false;
  }
  if (variant != 0) out << "#" << variant;
  return out.str();
}

Correspondence Correspondence::identity_on(const std::set<int>& ids) {
  Correspondence c;
  for (int i : ids) c.fwd[i] = i;
  return c;
}

Correspondence Correspondence::then(const Correspondence& next) const {
  Correspondence out;
  for (auto& [a, b] : fwd) {
    auto it = next.fwd.find(b);
    if (it != next.fwd.end()) out.fwd[a] = it->second;
  }
  return out;
}

namespace {

std::set<int> all_ids(const GaussCode& code) {
  std::set<int> s;
  for (auto& [id, info] : code.crossings) s.insert(id);
  return s;
}

bool code_is_flat(const GaussCode& code) {
  for (auto& [id, info] : code.crossings)
    if (info.flavor == Flavor::Classical) return false;
  return true;
}

bool code_is_classical(const GaussCode& code) {
  for (auto& [id, info] : code.crossings)
    if (info.flavor != Flavor::Classical) return false;
  return true;
}

struct Adjacency {
  CodePos p;
  CodePos q;
};

std::vector<Adjacency> adjacencies(const GaussCode& code) {
  std::vector<Adjacency> out;
  for (int c = 0; c < code.component_count(); ++c) {
    int n = code.comp_size(c);
    for (int i = 0; i < n; ++i) {
      CodePos p{c, i};
      auto q = code.next(p);
      if (q && n > 1) out.push_back({p, *q});
    }
  }
  return out;
}

struct Patch {
  SurfaceDiagram d;
  CodeMapLink link;
  std::vector<int> conn_departures;
};

// Local patch of the crossings touched by `conns`: each connection joins the
// out-end of the passage at `from` to the in-end of the passage at `to`;
// every other strand end becomes a boundary stub.
Patch build_patch(const GaussCode& code, const std::vector<std::pair<CodePos, CodePos>>& conns) {
  Patch patch;
  patch.d = SurfaceDiagram::empty(Surface::abstract_surface());
  SurfaceDiagram& d = patch.d;
  std::map<int, std::array<int, 4>> ends; // crossing -> {o_in,o_out,u_in,u_out}
  std::vector<int> used;
  for (auto& [p, q] : conns) {
    used.push_back(code.at(p).crossing);
    used.push_back(code.at(q).crossing);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int id : used) {
    const auto& info = code.crossings.at(id);
    int o_in = d.new_end(), o_out = d.new_end(), u_in = d.new_end(), u_out = d.new_end();
    SurfaceDiagram::Vertex vx;
    vx.flavor = info.flavor;
    if (info.sign > 0) vx.rot = {u_out, o_in, u_in, o_out};
    else vx.rot = {u_out, o_out, u_in, o_in};
    vx.over_slot = 1;
    int v = (int)d.vertices.size();
    d.vertices.push_back(vx);
    for (int s = 0; s < 4; ++s) {
      int e = d.vertices[v].rot[s];
      d.vert_of_[e] = v;
      d.slot_of_[e] = s;
    }
    d.inward_[o_in] = true;
    d.inward_[u_in] = true;
    ends[id] = {o_in, o_out, u_in, u_out};
    patch.link.vertex_of_crossing[id] = v;
  }
  std::set<int> connected;
  auto out_end = [&](CodePos p) {
    const auto& pas = code.at(p);
    return pas.role == Role::Over ? ends[pas.crossing][1] : ends[pas.crossing][3];
  };
  auto in_end = [&](CodePos p) {
    const auto& pas = code.at(p);
    return pas.role == Role::Over ? ends[pas.crossing][0] : ends[pas.crossing][2];
  };
  for (auto& [p, q] : conns) {
    int a = out_end(p), b = in_end(q);
    d.link_ends(a, b);
    d.wall_[a] = hom_zero(0);
    d.wall_[b] = hom_zero(0);
    connected.insert(a);
    connected.insert(b);
    patch.conn_departures.push_back(a);
  }
  for (auto& [id, e4] : ends) {
    for (int e : e4) {
      if (connected.count(e)) continue;
      int t = d.new_end();
      SurfaceDiagram::Vertex vx;
      vx.endpoint = true;
      vx.rot = {t};
      int v = (int)d.vertices.size();
      d.vertices.push_back(vx);
      d.vert_of_[t] = v;
      d.slot_of_[t] = 0;
      d.inward_[t] = !d.inward_[e];
      d.link_ends(e, t);
      d.wall_[e] = hom_zero(0);
      d.wall_[t] = hom_zero(0);
    }
  }
  return patch;
}

bool patch_face_matches(const Patch& patch) {
  auto f = patch.d.faces();
  std::set<int> want;
  for (int e : patch.conn_departures) want.insert(e);
  std::set<int> want_rev;
  for (int e : patch.conn_departures) want_rev.insert(patch.d.pair_[e]);
  for (auto& cyc : f.corners) {
    if (cyc.size() != want.size()) continue;
    std::set<int> darts;
    for (int corner : cyc) darts.insert(patch.d.sigma(corner));
    if (darts == want || darts == want_rev) return true;
  }
  return false;
}

bool flavors_ok(const GaussCode& code, const KnotTheory& theory) {
  if (theory.flat_world) return code_is_flat(code);
  return code_is_classical(code);
}

bool bigon_candidate(const GaussCode& code, const Adjacency& ai, const Adjacency& aj, bool flat,
                     bool clasp) {
  int c = code.at(ai.p).crossing, d = code.at(ai.q).crossing;
  int c2 = code.at(aj.p).crossing, d2 = code.at(aj.q).crossing;
  if (c == d || c2 == d2) return false;
  bool same_pair = (c == c2 && d == d2) || (c == d2 && d == c2);
  if (!same_pair) return false;
  if (ai.p == aj.p || ai.p == aj.q || ai.q == aj.p || ai.q == aj.q) return false;
  if (flat) return !clasp; // flat bigons need no role filter; no flat clasps
  Role rc1 = code.at(ai.p).role, rd1 = code.at(ai.q).role;
  Role rc2 = code.at(aj.p).role, rd2 = code.at(aj.q).role;
  if (!clasp) {
    bool over_i = rc1 == Role::Over && rd1 == Role::Over;
    bool under_i = rc1 == Role::Under && rd1 == Role::Under;
    bool over_j = rc2 == Role::Over && rd2 == Role::Over;
    bool under_j = rc2 == Role::Under && rd2 == Role::Under;
    if (!((over_i && under_j) || (under_i && over_j))) return false;
    return code.sign(c) == -code.sign(d);
  }
  if (rc1 == rd1 || rc2 == rd2) return false;
  return code.sign(c) == code.sign(d);
}

} // namespace

std::vector<MoveSite> find_moves(const GaussCode& code, const KnotTheory& theory,
                                 const FindOptions& opts) {
  if (!flavors_ok(code, theory))
    throw ClassError("diagram class does not match theory " + theory.name);
  std::vector<MoveSite> sites;
  auto adj = adjacencies(code);
  bool flat = theory.flat_world;

  bool want_o1 = theory.has(MoveTag::Omega1a) || theory.has(MoveTag::Omega1b);
  bool want_o2 = theory.has(MoveTag::Omega2a) || theory.has(MoveTag::Omega2c);
  bool want_o3 = theory.has(MoveTag::Omega3b);

  if (opts.decreasing) {
    if (want_o1) {
      for (auto& [id, info] : code.crossings) {
        auto [p, q] = code.positions(id);
        bool adjpq = code.next(p) && *code.next(p) == q;
        bool adjqp = code.next(q) && *code.next(q) == p;
        if (!adjpq && !adjqp) continue;
        CodePos first = adjpq ? p : q;
        bool over_first = code.at(first).role == Role::Over;
        bool positive = info.sign > 0;
        bool left = over_first != positive;
        MoveSite s;
        s.tag = left ? MoveTag::Omega1b : MoveTag::Omega1a;
        s.dir = Direction::Decreasing;
        s.crossings = {id};
        s.variant = (over_first ? 1 : 0) | (positive ? 2 : 0);
        sites.push_back(std::move(s));
      }
    }
    if (want_o2 || theory.has(MoveTag::Clasp)) {
      for (size_t i = 0; i < adj.size(); ++i) {
        for (size_t j = i + 1; j < adj.size(); ++j) {
          for (bool clasp : {false, true}) {
            if (clasp && !theory.has(MoveTag::Clasp)) continue;
            if (!clasp && !want_o2) continue;
            if (!bigon_candidate(code, adj[i], adj[j], flat, clasp)) continue;
            Patch patch = build_patch(code, {{adj[i].p, adj[i].q}, {adj[j].p, adj[j].q}});
            if (!patch_face_matches(patch)) continue;
            int c = code.at(adj[i].p).crossing, d = code.at(adj[i].q).crossing;
            MoveSite s;
            s.tag = clasp ? MoveTag::Clasp : MoveTag::Omega2a;
            s.dir = Direction::Decreasing;
            s.crossings = {std::min(c, d), std::max(c, d)};
            s.gaps = {adj[i].p, adj[j].p};
            sites.push_back(std::move(s));
          }
        }
      }
    }
    if (theory.has(MoveTag::CircleO1) || theory.has(MoveTag::CircleODelta)) {
      for (int c = 0; c < code.component_count(); ++c) {
        if (code.components[c].closed && code.components[c].passages.empty()) {
          MoveSite s;
          s.tag = theory.has(MoveTag::CircleO1) ? MoveTag::CircleO1 : MoveTag::CircleODelta;
          s.dir = Direction::Decreasing;
          s.gaps = {{c, 0}};
          sites.push_back(std::move(s));
        }
      }
    }
  }

  if ((want_o3 || theory.has(MoveTag::Delta)) && (opts.neutral || opts.decreasing)) {
    int n = (int)adj.size();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          int ci = code.at(adj[i].p).crossing, di = code.at(adj[i].q).crossing;
          int cj = code.at(adj[j].p).crossing, dj = code.at(adj[j].q).crossing;
          int ck = code.at(adj[k].p).crossing, dk = code.at(adj[k].q).crossing;
          if (ci == di || cj == dj || ck == dk) continue;
          std::set<int> xs = {ci, di, cj, dj, ck, dk};
          if (xs.size() != 3) continue;
          std::set<CodePos> ps = {adj[i].p, adj[i].q, adj[j].p, adj[j].q, adj[k].p, adj[k].q};
          if (ps.size() != 6) continue;
          Patch patch =
              build_patch(code, {{adj[i].p, adj[i].q}, {adj[j].p, adj[j].q}, {adj[k].p, adj[k].q}});
          if (!patch_face_matches(patch)) continue;
          TriangleSite tri =
              map_triangle_at(patch.d, patch.d.sigma_inv(patch.conn_departures[0]));
          if (!tri.valid)
            tri = map_triangle_at(patch.d,
                                  patch.d.sigma_inv(patch.d.pair_[patch.conn_departures[0]]));
          if (!tri.valid) continue;
          MoveSite s;
          s.dir = Direction::Neutral;
          s.crossings = {ci, cj, ck};
          s.gaps = {adj[i].p, adj[j].p, adj[k].p};
          if (want_o3 && (flat || tri.acyclic)) {
            MoveSite s2 = s;
            s2.tag = (!flat && tri.all_positive) ? MoveTag::Omega3b : MoveTag::Omega3o;
            sites.push_back(std::move(s2));
          }
          if (theory.has(MoveTag::Delta) && !flat) {
            s.tag = MoveTag::Delta;
            sites.push_back(std::move(s));
          }
        }
  }

  if (opts.neutral || opts.decreasing) {
    for (auto& [id, info] : code.crossings) {
      if (theory.has(MoveTag::CC) && info.flavor == Flavor::Classical) {
        MoveSite s;
        s.tag = MoveTag::CC;
        s.crossings = {id};
        sites.push_back(std::move(s));
      }
      if (theory.has(MoveTag::Flank) && info.flavor == Flavor::Flat) {
        MoveSite s;
        s.tag = MoveTag::Flank;
        s.crossings = {id};
        sites.push_back(std::move(s));
      }
    }
    if (theory.has(MoveTag::ForbiddenO) || theory.has(MoveTag::ForbiddenU) ||
        theory.has(MoveTag::ForbiddenM)) {
      for (auto& a : adj) {
        int c = code.at(a.p).crossing, d = code.at(a.q).crossing;
        if (c == d) continue;
        Role rc = code.at(a.p).role, rd = code.at(a.q).role;
        MoveTag t;
        if (rc == Role::Over && rd == Role::Over) t = MoveTag::ForbiddenO;
        else if (rc == Role::Under && rd == Role::Under) t = MoveTag::ForbiddenU;
        else t = MoveTag::ForbiddenM;
        if (!theory.has(t)) continue;
        MoveSite s;
        s.tag = t;
        s.crossings = {c, d};
        s.gaps = {a.p};
        sites.push_back(std::move(s));
      }
    }
  }

  if (opts.increasing) {
    std::vector<CodePos> gaps;
    for (int c = 0; c < code.component_count(); ++c) {
      int n = code.comp_size(c);
      int gap_count = code.components[c].closed ? std::max(1, n) : n + 1;
      for (int g = 0; g < gap_count; ++g) gaps.push_back({c, g});
    }
    if (want_o1) {
      for (auto& g : gaps) {
        for (int variant = 0; variant < 4; ++variant) {
          bool over_first = variant & 1;
          bool positive = variant & 2;
          bool left = over_first != positive;
          MoveSite s;
          s.tag = left ? MoveTag::Omega1b : MoveTag::Omega1a;
          s.dir = Direction::Increasing;
          s.gaps = {g};
          s.variant = variant;
          sites.push_back(std::move(s));
        }
      }
    }
    if (want_o2) {
      int count = 0;
      for (size_t i = 0; i < gaps.size() && count < opts.increasing_cap; ++i)
        for (size_t j = 0; j < gaps.size() && count < opts.increasing_cap; ++j) {
          if (i == j) continue;
          for (int variant = 0; variant < 8; ++variant) {
            MoveSite s;
            bool anti = variant & 2;
            s.tag = anti ? ((variant & 1) ? MoveTag::Omega2b : MoveTag::Omega2a)
                         : ((variant & 1) ? MoveTag::Omega2d : MoveTag::Omega2c);
            s.dir = Direction::Increasing;
            s.gaps = {gaps[i], gaps[j]};
            s.variant = variant;
            sites.push_back(std::move(s));
          }
          ++count;
        }
    }
    if (theory.has(MoveTag::CircleO1)) {
      MoveSite s;
      s.tag = MoveTag::CircleO1;
      s.dir = Direction::Increasing;
      sites.push_back(std::move(s));
    }
  }

  std::sort(sites.begin(), sites.end(), [](const MoveSite& a, const MoveSite& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    if (a.dir != b.dir) return a.dir < b.dir;
    if (a.crossings != b.crossings) return a.crossings < b.crossings;
    if (a.gaps != b.gaps) return a.gaps < b.gaps;
    return a.variant < b.variant;
  });
  return sites;
}

MoveResult apply_move(const GaussCode& code, const MoveSite& site) {
  MoveResult res;
  res.code = code;
  GaussCode& out = res.code;
  std::set<int> survivors = all_ids(code);
  bool flat_code = code_is_flat(code) && !code.crossings.empty();

  switch (site.tag) {
    case MoveTag::Omega1a:
    case MoveTag::Omega1b: {
      if (site.dir == Direction::Decreasing) {
        int id = site.crossings.at(0);
        auto [p, q] = out.positions(id);
        out.erase_positions({p, q});
        out.remove_crossing_entry(id);
        survivors.erase(id);
      } else {
        bool over_first = site.variant & 1;
        bool positive = site.variant & 2;
        int id = out.fresh_id();
        CodePos g = site.gaps.at(0);
        std::vector<Passage> ps = {{id, over_first ? Role::Over : Role::Under},
                                   {id, over_first ? Role::Under : Role::Over}};
        out.insert_passages(g, ps);
        out.crossings[id] = {positive ? 1 : -1, flat_code ? Flavor::Flat : Flavor::Classical};
        res.created.push_back(id);
      }
      break;
    }
    case MoveTag::Omega2a:
    case MoveTag::Omega2b:
    case MoveTag::Omega2c:
    case MoveTag::Omega2d: {
      if (site.dir == Direction::Decreasing) {
        int c = site.crossings.at(0), d = site.crossings.at(1);
        auto [p1, q1] = out.positions(c);
        auto [p2, q2] = out.positions(d);
        out.erase_positions({p1, q1, p2, q2});
        out.remove_crossing_entry(c);
        out.remove_crossing_entry(d);
        survivors.erase(c);
        survivors.erase(d);
      } else {
        bool over_first = site.variant & 1;
        bool anti = site.variant & 2;
        bool positive = site.variant & 4;
        int c = out.fresh_id();
        int d = c + 1;
        CodePos g1 = site.gaps.at(0);
        CodePos g2 = site.gaps.at(1);
        if (g1 == g2) throw SiteError("omega2 increase needs distinct gaps");
        Role r = over_first ? Role::Over : Role::Under;
        Role rr = flip(r);
        std::vector<Passage> at1 = {{c, r}, {d, r}};
        std::vector<Passage> at2 = anti ? std::vector<Passage>{{d, rr}, {c, rr}}
                                        : std::vector<Passage>{{c, rr}, {d, rr}};
        if (g1.comp == g2.comp && g2.idx < g1.idx) {
          out.insert_passages(g1, at1);
          out.insert_passages(g2, at2);
        } else {
          out.insert_passages(g2, at2);
          out.insert_passages(g1, at1);
        }
        Flavor fl = flat_code ? Flavor::Flat : Flavor::Classical;
        out.crossings[c] = {positive ? 1 : -1, fl};
        out.crossings[d] = {positive ? -1 : 1, fl};
        res.created = {c, d};
        // Validate the created bigon.
        auto adj2 = adjacencies(out);
        bool found = false;
        for (size_t i = 0; i < adj2.size() && !found; ++i)
          for (size_t j = i + 1; j < adj2.size() && !found; ++j) {
            std::set<int> ids = {out.at(adj2[i].p).crossing, out.at(adj2[i].q).crossing,
                                 out.at(adj2[j].p).crossing, out.at(adj2[j].q).crossing};
            if (ids != std::set<int>{c, d}) continue;
            Patch patch = build_patch(out, {{adj2[i].p, adj2[i].q}, {adj2[j].p, adj2[j].q}});
            if (patch_face_matches(patch)) found = true;
          }
        if (!found) throw SiteError("omega2 increase variant is not planar");
      }
      break;
    }
    case MoveTag::Omega3b:
    case MoveTag::Omega3o:
    case MoveTag::Delta: {
      std::vector<CodePos> firsts = site.gaps;
      if (firsts.size() != 3) throw SiteError("triangle site needs three anchors");
      for (auto& p : firsts) {
        auto q = out.next(p);
        if (!q) throw SiteError("stale triangle site");
        std::swap(out.at(p), out.at(*q));
      }
      break;
    }
    case MoveTag::CC: {
      int id = site.crossings.at(0);
      auto& info = out.crossings.at(id);
      if (info.flavor != Flavor::Classical)
        throw ClassError("crossing change on non-classical crossing");
      info.sign = -info.sign;
      auto [p, q] = out.positions(id);
      out.at(p).role = flip(out.at(p).role);
      out.at(q).role = flip(out.at(q).role);
      break;
    }
    case MoveTag::Flank: {
      int id = site.crossings.at(0);
      auto& info = out.crossings.at(id);
      if (info.flavor != Flavor::Flat) throw ClassError("flanking move on non-flat crossing");
      info.sign = -info.sign;
      break;
    }
    case MoveTag::Clasp: {
      if (site.dir != Direction::Decreasing)
        throw SiteError("increasing clasps are composites of omega2 and cc");
      int c = site.crossings.at(0), d = site.crossings.at(1);
      auto [p1, q1] = out.positions(c);
      auto [p2, q2] = out.positions(d);
      out.erase_positions({p1, q1, p2, q2});
      out.remove_crossing_entry(c);
      out.remove_crossing_entry(d);
      survivors.erase(c);
      survivors.erase(d);
      break;
    }
    case MoveTag::ForbiddenO:
    case MoveTag::ForbiddenU:
    case MoveTag::ForbiddenM: {
      CodePos p = site.gaps.at(0);
      auto q = out.next(p);
      if (!q) throw SiteError("stale forbidden-move site");
      std::swap(out.at(p), out.at(*q));
      break;
    }
    case MoveTag::SmOr:
    case MoveTag::SmUnor:
    case MoveTag::SmA:
    case MoveTag::SmB: {
      int id = site.crossings.at(0);
      int sign = out.sign(id);
      MoveTag t = site.tag;
      if (t == MoveTag::SmA) t = sign > 0 ? MoveTag::SmOr : MoveTag::SmUnor;
      if (t == MoveTag::SmB) t = sign > 0 ? MoveTag::SmUnor : MoveTag::SmOr;
      if (t == MoveTag::SmOr) out.smooth_oriented(id);
      else out.smooth_unoriented(id);
      survivors.erase(id);
      break;
    }
    case MoveTag::CircleO1:
    case MoveTag::CircleODelta: {
      if (site.dir == Direction::Decreasing) {
        CodePos g = site.gaps.at(0);
        if (!out.components[g.comp].passages.empty())
          throw SiteError("circle deletion on a component with crossings");
        out.components.erase(out.components.begin() + g.comp);
      } else {
        GaussCode::Component comp;
        comp.closed = true;
        out.components.push_back(comp);
      }
      break;
    }
    case MoveTag::H2:
    case MoveTag::H2o: {
      CodePos g1 = site.gaps.at(0), g2 = site.gaps.at(1);
      if (g1.comp == g2.comp) {
        auto& comp = out.components[g1.comp];
        if (!comp.closed) throw SiteError("splice needs closed components");
        int lo = std::min(g1.idx, g2.idx), hi = std::max(g1.idx, g2.idx);
        std::vector<Passage> between(comp.passages.begin() + lo, comp.passages.begin() + hi);
        std::vector<Passage> rest;
        rest.insert(rest.end(), comp.passages.begin(), comp.passages.begin() + lo);
        rest.insert(rest.end(), comp.passages.begin() + hi, comp.passages.end());
        comp.passages = rest;
        GaussCode::Component loop;
        loop.closed = true;
        loop.passages = between;
        out.components.insert(out.components.begin() + g1.comp + 1, loop);
      } else {
        auto& A = out.components[g1.comp];
        auto& B = out.components[g2.comp];
        if (!A.closed || !B.closed) throw SiteError("splice needs closed components");
        std::vector<Passage> merged;
        merged.insert(merged.end(), A.passages.begin(), A.passages.begin() + g1.idx);
        merged.insert(merged.end(), B.passages.begin() + g2.idx, B.passages.end());
        merged.insert(merged.end(), B.passages.begin(), B.passages.begin() + g2.idx);
        merged.insert(merged.end(), A.passages.begin() + g1.idx, A.passages.end());
        A.passages = merged;
        out.components.erase(out.components.begin() + g2.comp);
      }
      if (site.tag == MoveTag::H2o) {
        GaussCode::Component comp;
        comp.closed = true;
        out.components.push_back(comp);
      }
      break;
    }
    default:
      throw SiteError("move " + move_tag_name(site.tag) + " has no executable form here");
  }
  res.corr = Correspondence::identity_on(survivors);
  out.validate();
  return res;
}

} // namespace skein
