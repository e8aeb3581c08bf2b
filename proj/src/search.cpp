#include "skein/search.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace skein {

namespace {

std::vector<GaussCode> neighbours(const GaussCode& code, const KnotTheory& theory,
                                  const SearchBudget& budget) {
  FindOptions fo;
  fo.decreasing = true;
  fo.neutral = true;
  fo.increasing = code.crossing_count() + 2 <= budget.crossing_cap;
  fo.increasing_cap = budget.increasing_cap;
  std::vector<GaussCode> out;
  for (auto& s : find_moves(code, theory, fo)) {
    try {
      out.push_back(apply_move(code, s).code);
    } catch (const SiteError&) {
    }
  }
  return out;
}

} // namespace

SearchResult bfs_connect(const GaussCode& a, const GaussCode& b, const KnotTheory& theory,
                         const SearchBudget& budget) {
  SearchResult res;
  std::string ca = a.canonical_string(), cb = b.canonical_string();
  if (ca == cb) {
    res.status = SearchStatus::Connected;
    return res;
  }
  // Two frontiers expanded alternately.
  struct Side {
    std::unordered_map<std::string, int> depth;
    std::deque<std::pair<GaussCode, int>> queue;
  };
  Side A, B;
  A.depth[ca] = 0;
  A.queue.push_back({a, 0});
  B.depth[cb] = 0;
  B.queue.push_back({b, 0});
  int half = (budget.depth_cap + 1) / 2;
  bool exhausted_a = false, exhausted_b = false;
  while ((!A.queue.empty() || !B.queue.empty()) && res.explored < budget.node_cap) {
    for (Side* side : {&A, &B}) {
      Side& other = side == &A ? B : A;
      if (side->queue.empty()) continue;
      auto [cur, depth] = side->queue.front();
      side->queue.pop_front();
      if (depth >= half) continue;
      for (auto& nb : neighbours(cur, theory, budget)) {
        ++res.explored;
        std::string key = nb.canonical_string();
        if (other.depth.count(key)) {
          res.status = SearchStatus::Connected;
          return res;
        }
        if (side->depth.count(key)) continue;
        side->depth[key] = depth + 1;
        side->queue.push_back({nb, depth + 1});
        if (res.explored >= budget.node_cap) break;
      }
    }
    exhausted_a = A.queue.empty();
    exhausted_b = B.queue.empty();
  }
  if ((exhausted_a || exhausted_b) && res.explored < budget.node_cap) {
    // A frontier closed under all moves within the cap never meets the
    // other side; unequal within this budget, though only the cap-free
    // closure would prove it outright.
    res.status = SearchStatus::Inconclusive;
  }
  return res;
}

GaussCode reduce_min(const GaussCode& code, const KnotTheory& theory, const SearchBudget& budget) {
  auto better = [](const GaussCode& x, const GaussCode& y) {
    if (x.crossing_count() != y.crossing_count()) return x.crossing_count() < y.crossing_count();
    return x.canonical_string() < y.canonical_string();
  };
  GaussCode best = code.normalized();
  std::unordered_set<std::string> seen;
  std::deque<std::pair<GaussCode, int>> queue;
  queue.push_back({best, 0});
  seen.insert(best.str());
  long long explored = 0;
  while (!queue.empty() && explored < budget.node_cap) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth >= budget.depth_cap) continue;
    FindOptions fo;
    fo.decreasing = true;
    fo.neutral = true;
    fo.increasing = false;
    for (auto& s : find_moves(cur, theory, fo)) {
      GaussCode nb;
      try {
        nb = apply_move(cur, s).code.normalized();
      } catch (const SiteError&) {
        continue;
      }
      ++explored;
      if (seen.count(nb.str())) continue;
      seen.insert(nb.str());
      if (better(nb, best)) best = nb;
      queue.push_back({nb, depth + 1});
    }
  }
  return best;
}

} // namespace skein
