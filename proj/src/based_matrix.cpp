#include "skein/based_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace skein {

namespace {

struct HalfData {
  std::vector<int> crossings;
  std::vector<ClosedWalk> halves; // left halves
  std::vector<ClosedWalk> strands;
  SurfaceDiagram d;
};

HalfData halves_of(const GaussCode& code) {
  HalfData h;
  CodeMapLink link;
  h.d = carter_surface_linked(code, link);
  for (auto& [id, info] : code.crossings) {
    auto [p, q] = code.positions(id);
    if (p.comp != q.comp) throw ClassError("based matrix needs a knot (self-crossings only)");
    h.crossings.push_back(id);
    bool first_left = first_half_is_left(h.d, link, id);
    h.halves.push_back(half_walk(h.d, link, id, first_left));
  }
  for (auto& s : h.d.strands()) h.strands.push_back(SurfaceDiagram::walk_of_strand(h.d, s));
  return h;
}

long long pair_with_diagram(const HalfData& h, const ClosedWalk& x) {
  long long v = 0;
  for (auto& s : h.strands) v += h.d.intersect(x, s);
  return v;
}

// One reduction step: drop zero rows, rows equal to the * row, and
// complementary pairs (rows summing to the * row); lowest indices first.
bool reduce_step(std::vector<std::vector<long long>>& m, std::vector<int>& ids) {
  int n = (int)m.size();
  auto drop = [&](std::vector<int> rows) {
    std::sort(rows.rbegin(), rows.rend());
    for (int r : rows) {
      m.erase(m.begin() + r);
      for (auto& row : m) row.erase(row.begin() + r);
      ids.erase(ids.begin() + r);
    }
  };
  for (int i = 1; i < n; ++i) {
    bool zero = true;
    for (int j = 0; j < n; ++j)
      if (m[i][j] != 0) zero = false;
    if (zero) {
      drop({i});
      return true;
    }
    // Core rows agree with the * row everywhere except their own column.
    bool core = m[0][i] == 0;
    for (int j = 0; j < n && core; ++j)
      if (j != i && m[i][j] != m[0][j]) core = false;
    if (core) {
      drop({i});
      return true;
    }
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool comp = true;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (m[i][k] + m[j][k] != m[0][k]) comp = false;
      }
      if (comp) {
        drop({i, j});
        return true;
      }
    }
  return false;
}

} // namespace

BasedMatrix based_matrix(const GaussCode& flat_code) {
  BasedMatrix bm;
  HalfData h = halves_of(flat_code);
  bm.genus = map_genus(h.d);
  bm.crossings = h.crossings;
  int n = (int)h.crossings.size();
  bm.full.assign(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j) bm.full[i + 1][j + 1] = h.d.intersect(h.halves[i], h.halves[j]);
    long long dv = -pair_with_diagram(h, h.halves[i]);
    bm.full[0][i + 1] = dv;
    bm.full[i + 1][0] = -dv;
  }
  bm.reduced = bm.full;
  std::vector<int> ids(n + 1);
  ids[0] = -1;
  for (int i = 0; i < n; ++i) ids[i + 1] = h.crossings[i];
  while (reduce_step(bm.reduced, ids)) {
  }
  for (size_t i = 1; i < ids.size(); ++i) bm.reduced_crossings.push_back(ids[i]);
  return bm;
}

bool based_matrix_equivalent(const std::vector<std::vector<long long>>& a,
                             const std::vector<std::vector<long long>>& b) {
  if (a.size() != b.size()) return false;
  int n = (int)a.size();
  if (n == 0) return true;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  for (int sign : {1, -1}) {
    std::vector<int> p = perm;
    do {
      bool ok = true;
      auto idx = [&](int i) { return i == 0 ? 0 : p[i - 1]; };
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (a[i][j] != sign * b[idx(i)][idx(j)]) ok = false;
      if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return false;
}

TribeThresholdTrait::TribeThresholdTrait(std::vector<std::vector<long long>> reference,
                                         std::vector<long long> alpha, long long beta)
    : reference_(std::move(reference)), alpha_(std::move(alpha)), beta_(beta) {}

std::string TribeThresholdTrait::descriptor() const {
  std::string s = "tribe:";
  for (size_t i = 0; i < alpha_.size(); ++i) s += (i ? "," : "") + std::to_string(alpha_[i]);
  s += ";" + std::to_string(beta_);
  return s;
}

std::map<int, long long> TribeThresholdTrait::phi(const GaussCode& code) const {
  HalfData h = halves_of(code);
  BasedMatrix bm = based_matrix(code);
  int n = (int)reference_.size();
  if ((int)bm.reduced.size() != n)
    throw ClassError("tribe trait: diagram is not in the trait's knot family");
  // Match reduced rows against the reference, fixing the * row.
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> match;
  do {
    bool ok = true;
    auto idx = [&](int i) { return i == 0 ? 0 : perm[i - 1]; };
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (reference_[i][j] != bm.reduced[idx(i)][idx(j)]) ok = false;
    if (ok) {
      match = perm;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (match.empty()) throw ClassError("tribe trait: reduced matrix mismatch");

  // Tribe representatives: surviving crossings by matched position.
  std::vector<ClosedWalk> tribe_halves(n - 1);
  for (int t = 1; t < n; ++t) {
    int reduced_pos = match[t - 1] - 1;
    int crossing = bm.reduced_crossings[reduced_pos];
    for (size_t k = 0; k < h.crossings.size(); ++k)
      if (h.crossings[k] == crossing) tribe_halves[t - 1] = h.halves[k];
  }
  std::map<int, long long> out;
  for (size_t k = 0; k < h.crossings.size(); ++k) {
    long long val = 0;
    for (int t = 0; t < n - 1; ++t)
      val += alpha_[t] * h.d.intersect(tribe_halves[t], h.halves[k]);
    val -= beta_ * (-pair_with_diagram(h, h.halves[k])); // D . D_c = -(D_c . D)
    out[h.crossings[k]] = val;
  }
  return out;
}

long long TribeThresholdTrait::phi_of_class(const GaussCode& code) const {
  (void)code;
  // psi . D = sum_t alpha_t (D_t . D); D . D = 0 kills the beta term.
  long long val = 0;
  for (int t = 1; t < (int)reference_.size(); ++t)
    val += alpha_[t - 1] * (-reference_[0][t]);
  return val;
}

std::map<int, int> TribeThresholdTrait::labels(const GaussCode& code) const {
  std::map<int, int> out;
  for (auto& [id, v] : phi(code)) out[id] = v >= 0 ? 0 : 1;
  return out;
}

} // namespace skein
