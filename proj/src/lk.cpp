#include <numeric>
#include <sstream>

#include "skein/invariants.hpp"

namespace skein {

namespace {

// Canonical representative of h modulo the lattice generated by the given
// vectors (rank at most 2).
HomClass coset_repr(HomClass h, std::vector<HomClass> gens) {
  int rank = (int)h.size();
  if (rank == 0) return h;
  // Collect nonzero generators.
  std::vector<HomClass> g;
  for (auto& v : gens)
    if (!hom_is_zero(v)) g.push_back(v);
  if (g.empty()) return h;
  if (rank == 1) {
    long long m = 0;
    for (auto& v : g) m = std::gcd(m, std::abs(v[0]));
    if (m != 0) h[0] = ((h[0] % m) + m) % m;
    return h;
  }
  // rank 2: Hermite normal form of the generator lattice.
  // Reduce generators to at most two independent rows (a b; 0 c).
  std::vector<std::array<long long, 2>> rows;
  for (auto& v : g) rows.push_back({v[0], v[1]});
  // Eliminate on the first coordinate by gcd.
  auto swap_rows = [&](size_t i, size_t j) { std::swap(rows[i], rows[j]); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j) {
        if (i == j) continue;
        if (rows[j][0] != 0 && rows[i][0] != 0 && std::abs(rows[i][0]) <= std::abs(rows[j][0])) {
          long long q = rows[j][0] / rows[i][0];
          rows[j][0] -= q * rows[i][0];
          rows[j][1] -= q * rows[i][1];
          if (q != 0) changed = true;
        }
      }
  }
  std::array<long long, 2> first = {0, 0};
  for (auto& r : rows)
    if (r[0] != 0) first = r;
  long long g2 = 0;
  for (auto& r : rows)
    if (r[0] == 0) g2 = std::gcd(g2, std::abs(r[1]));
  if (first[0] != 0) {
    if (first[0] < 0) {
      first[0] = -first[0];
      first[1] = -first[1];
    }
    // h mod lattice: first reduce coordinate 0 by first, then coordinate 1 by g2.
    long long q = h[0] >= 0 ? h[0] / first[0] : -((-h[0] + first[0] - 1) / first[0]);
    h[0] -= q * first[0];
    h[1] -= q * first[1];
  }
  if (g2 != 0) h[1] = ((h[1] % g2) + g2) % g2;
  return h;
}

std::string hom_s(const HomClass& h) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
  out << ")";
  return out.str();
}

} // namespace

std::string LKData::str() const {
  std::ostringstream out;
  out << "kappa:";
  for (auto& k : kappa) out << hom_s(k);
  for (auto& [ij, sum] : lk) {
    out << " lk[" << ij.first << "," << ij.second << "]:";
    for (auto& [h, c] : sum) out << c << hom_s(h);
  }
  for (auto& [ie, sum] : lk_long) {
    out << " lk" << (ie.second > 0 ? "+" : "-") << "[" << ie.first << "]:";
    for (auto& [h, c] : sum) out << c << hom_s(h);
  }
  return out.str();
}

LKData lk_data(const SurfaceDiagram& d) {
  LKData out;
  auto strands = d.strands();
  int rank = d.surface.rank();
  // Per-component data: classes and prefix classes along the strand.
  std::vector<HomClass> kappa;
  // map: in_end -> (component, class of the path from the component start).
  std::map<int, std::pair<int, HomClass>> arrive_at;
  for (size_t si = 0; si < strands.size(); ++si) {
    HomClass acc = hom_zero(rank);
    for (int u : strands[si].out_ends) {
      acc = hom_add(acc, d.wall_[u]);
      arrive_at[d.pair_[u]] = {(int)si, acc};
    }
    kappa.push_back(strands[si].closed ? acc : hom_zero(rank));
  }
  for (auto& l : d.free_loops) kappa.push_back(l.hom);
  out.kappa = kappa;

  for (int v = 0; v < (int)d.vertices.size(); ++v) {
    const auto& vx = d.vertices[v];
    if (vx.rot.empty() || vx.endpoint) continue;
    if (vx.flavor != Flavor::Classical) throw ClassError("LK needs classical crossings");
    // the two passages
    std::vector<int> ins;
    for (int e : vx.rot)
      if (d.inward_[e]) ins.push_back(e);
    int over_in = d.is_over_end(ins[0]) ? ins[0] : ins[1];
    int under_in = d.is_over_end(ins[0]) ? ins[1] : ins[0];
    auto [ci, acc_over] = arrive_at.at(over_in);
    auto [cj, acc_under] = arrive_at.at(under_in);
    int sign = d.vertex_sign(v);
    if (ci != cj) {
      // mixed: h = gamma_{z_i,v} gamma_{z_j,v}^{-1}
      HomClass h = hom_add(acc_over, hom_neg(acc_under));
      h = coset_repr(std::move(h), {kappa[ci], kappa[cj]});
      out.lk[{ci, cj}][h] += sign;
      if (out.lk[{ci, cj}][h] == 0) out.lk[{ci, cj}].erase(h);
    } else {
      bool closed = strands[ci].closed;
      // half from the under passage to the over passage
      HomClass h;
      {
        HomClass acc = hom_zero(rank);
        int cur = d.opposite(under_in);
        while (true) {
          acc = hom_add(acc, d.wall_[cur]);
          int a = d.pair_[cur];
          if (a == over_in) break;
          cur = d.opposite(a);
        }
        h = acc;
      }
      if (closed) {
        if (hom_is_zero(h) || h == kappa[ci]) continue;
        out.lk[{ci, ci}][h] += sign;
        if (out.lk[{ci, ci}][h] == 0) out.lk[{ci, ci}].erase(h);
      } else {
        if (hom_is_zero(h)) continue;
        // early undercrossing: the under passage comes first along the strand
        int eps = 0;
        for (int u : strands[ci].out_ends) {
          int a = d.pair_[u];
          if (a == under_in) {
            eps = -1;
            break;
          }
          if (a == over_in) {
            eps = 1;
            break;
          }
        }
        out.lk_long[{ci, eps}][h] += sign;
        if (out.lk_long[{ci, eps}][h] == 0) out.lk_long[{ci, eps}].erase(h);
      }
    }
  }
  return out;
}

LKData lk_data(const GaussCode& code) {
  LKData out;
  int n = code.component_count();
  out.kappa.assign(n, HomClass{});
  auto comps = component_index(code);
  for (auto& [id, info] : code.crossings) {
    if (info.flavor != Flavor::Classical) throw ClassError("LK needs classical crossings");
    auto [i, j] = comps.at(id);
    if (i == j) continue; // rank-0 homotopy indices of self-crossings are trivial
    out.lk[{i - 1, j - 1}][HomClass{}] += info.sign;
    if (out.lk[{i - 1, j - 1}][HomClass{}] == 0) out.lk[{i - 1, j - 1}].erase(HomClass{});
  }
  return out;
}

DeltaVerdict lk_delta(const SurfaceDiagram& a, const SurfaceDiagram& b) {
  DeltaVerdict v{false, lk_data(a), lk_data(b)};
  v.equivalent = v.a == v.b;
  return v;
}

DeltaVerdict lk_delta(const GaussCode& a, const GaussCode& b) {
  DeltaVerdict v{false, lk_data(a), lk_data(b)};
  v.equivalent = v.a == v.b;
  return v;
}

std::map<HomClass, long long> goldman_bracket(const SurfaceDiagram& d) {
  auto strands = d.strands();
  std::map<HomClass, long long> out;
  int rank = d.surface.rank();
  if (rank == 0) return out; // all classes trivial on the plane/sphere
  std::vector<HomClass> kappa;
  std::map<int, int> comp_of_in;
  for (size_t si = 0; si < strands.size(); ++si) {
    kappa.push_back(d.strand_class(strands[si]));
    for (int u : strands[si].out_ends) comp_of_in[d.pair_[u]] = (int)si;
  }
  for (int v = 0; v < (int)d.vertices.size(); ++v) {
    const auto& vx = d.vertices[v];
    if (vx.rot.empty() || vx.endpoint) continue;
    std::vector<int> ins;
    for (int e : vx.rot)
      if (d.inward_[e]) ins.push_back(e);
    int c1 = comp_of_in.at(ins[0]);
    int c2 = comp_of_in.at(ins[1]);
    if (c1 == c2) continue; // self-crossings contribute zero to the bracket
    // sign: +1 iff (d_first, d_second) is a positive frame, components
    // ordered by index.
    int first_in = c1 < c2 ? ins[0] : ins[1];
    int second_in = c1 < c2 ? ins[1] : ins[0];
    int first_out = d.opposite(first_in);
    int second_out = d.opposite(second_in);
    int sign = d.slot_of_[second_out] == (d.slot_of_[first_out] + 1) % 4 ? 1 : -1;
    HomClass merged = hom_add(kappa[c1], kappa[c2]);
    out[merged] += sign;
    if (out[merged] == 0) out.erase(merged);
  }
  return out;
}

std::map<std::pair<HomClass, HomClass>, long long> turaev_cobracket(const SurfaceDiagram& d) {
  std::map<std::pair<HomClass, HomClass>, long long> out;
  int rank = d.surface.rank();
  if (rank == 0) return out;
  auto strands = d.strands();
  std::map<int, int> comp_of_in;
  for (size_t si = 0; si < strands.size(); ++si)
    for (int u : strands[si].out_ends) comp_of_in[d.pair_[u]] = (int)si;
  for (int v = 0; v < (int)d.vertices.size(); ++v) {
    const auto& vx = d.vertices[v];
    if (vx.rot.empty() || vx.endpoint) continue;
    std::vector<int> ins;
    for (int e : vx.rot)
      if (d.inward_[e]) ins.push_back(e);
    if (comp_of_in.at(ins[0]) != comp_of_in.at(ins[1])) continue;
    // halves at the self-crossing
    auto half_class = [&](int from_in, int to_in) {
      HomClass acc = hom_zero(rank);
      int cur = d.opposite(from_in);
      while (true) {
        acc = hom_add(acc, d.wall_[cur]);
        int a = d.pair_[cur];
        if (a == to_in) break;
        cur = d.opposite(a);
      }
      return acc;
    };
    int out0 = d.opposite(ins[0]);
    int out1 = d.opposite(ins[1]);
    bool zero_is_left = d.slot_of_[out0] == (d.slot_of_[out1] + 1) % 4;
    int left_in = zero_is_left ? ins[0] : ins[1];
    int right_in = zero_is_left ? ins[1] : ins[0];
    HomClass left = half_class(left_in, right_in);
    HomClass right = half_class(right_in, left_in);
    if (hom_is_zero(left) || hom_is_zero(right)) continue; // O_0 reduction
    // Handedness of the flat crossing; the component numbering folds it in
    // so that second Reidemeister partners cancel.
    int eps = d.vertex_sign_if_over(v, left_in);
    auto key = eps > 0 ? std::make_pair(left, right) : std::make_pair(right, left);
    out[key] += eps;
    if (out[key] == 0) out.erase(key);
  }
  return out;
}

std::vector<std::vector<long long>> fused_linking(const GaussCode& code,
                                                  const BinaryTrait& trait) {
  int n = code.component_count();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  auto labels = trait.labels(code);
  auto comps = component_index(code);
  for (auto& [id, info] : code.crossings) {
    if (info.flavor != Flavor::Classical)
      throw ClassError("fused linking matrix needs classical crossings");
    if (labels.at(id) != 0) continue;
    auto [i, j] = comps.at(id);
    m[i - 1][j - 1] += info.sign;
  }
  return m;
}

} // namespace skein
