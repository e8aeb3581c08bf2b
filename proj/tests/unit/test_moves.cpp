#include "doctest.h"

#include "skein/moves.hpp"
#include "skein/search.hpp"
#include "skein/walk.hpp"

using namespace skein;

namespace {
const char* kTrefoil = "(O1+U2+O3+U1+O2+U3+)";
const char* kKink = "(O1+U1+)";

int count_tag(const std::vector<MoveSite>& sites, MoveTag t, Direction d) {
  int n = 0;
  for (auto& s : sites)
    if (s.tag == t && s.dir == d) ++n;
  return n;
}
} // namespace

TEST_CASE("kinked unknot has exactly one decreasing omega1 site") {
  GaussCode c = GaussCode::parse(kKink);
  auto theory = KnotTheory::preset("class+");
  auto sites = find_moves(c, theory);
  int o1 = count_tag(sites, MoveTag::Omega1a, Direction::Decreasing) +
           count_tag(sites, MoveTag::Omega1b, Direction::Decreasing);
  CHECK(o1 == 1);
  int o2 = count_tag(sites, MoveTag::Omega2a, Direction::Decreasing);
  CHECK(o2 == 0);
}

TEST_CASE("standard trefoil has no decreasing sites") {
  GaussCode c = GaussCode::parse(kTrefoil);
  auto theory = KnotTheory::preset("class+");
  auto sites = find_moves(c, theory);
  for (auto& s : sites) CHECK(s.dir != Direction::Decreasing);
}

TEST_CASE("crossingless circle offers only increasing sites") {
  GaussCode c = GaussCode::parse("()");
  auto theory = KnotTheory::preset("class+");
  FindOptions fo;
  fo.increasing = true;
  auto sites = find_moves(c, theory, fo);
  bool has_increase = false;
  for (auto& s : sites) {
    if (s.tag == MoveTag::CircleO1) continue;
    CHECK(s.dir == Direction::Increasing);
    has_increase = true;
  }
  CHECK(has_increase);
}

TEST_CASE("omega1 insert then delete returns the original") {
  GaussCode c = GaussCode::parse(kTrefoil);
  auto theory = KnotTheory::preset("class+");
  FindOptions fo;
  fo.increasing = true;
  fo.decreasing = false;
  auto sites = find_moves(c, theory, fo);
  int tried = 0;
  for (auto& s : sites) {
    if (s.tag != MoveTag::Omega1a && s.tag != MoveTag::Omega1b) continue;
    auto r = apply_move(c, s);
    CHECK(r.code.crossing_count() == 4);
    auto dec = find_moves(r.code, theory);
    bool found = false;
    for (auto& s2 : dec)
      if ((s2.tag == MoveTag::Omega1a || s2.tag == MoveTag::Omega1b) &&
          s2.dir == Direction::Decreasing && s2.crossings == r.created) {
        auto back = apply_move(r.code, s2);
        CHECK(back.code.canonical_string() == c.canonical_string());
        found = true;
      }
    CHECK(found);
    if (++tried > 6) break;
  }
  CHECK(tried > 0);
}

TEST_CASE("omega2 increase then decrease round trips") {
  GaussCode c = GaussCode::parse(kTrefoil);
  auto theory = KnotTheory::preset("class+");
  FindOptions fo;
  fo.increasing = true;
  fo.decreasing = false;
  fo.increasing_cap = 1000;
  auto sites = find_moves(c, theory, fo);
  int applied = 0, rejected = 0;
  for (auto& s : sites) {
    if (s.dir != Direction::Increasing) continue;
    if (s.tag != MoveTag::Omega2a && s.tag != MoveTag::Omega2b && s.tag != MoveTag::Omega2c &&
        s.tag != MoveTag::Omega2d)
      continue;
    MoveResult r;
    try {
      r = apply_move(c, s);
    } catch (const SiteError&) {
      ++rejected;
      continue;
    }
    ++applied;
    CHECK(r.code.crossing_count() == 5);
    for (auto& [id, info] : c.crossings) CHECK(r.corr.map(id) == id);
    auto dec = find_moves(r.code, theory);
    bool found = false;
    for (auto& s2 : dec)
      if (s2.tag == MoveTag::Omega2a && s2.dir == Direction::Decreasing &&
          s2.crossings == r.created) {
        auto back = apply_move(r.code, s2);
        if (back.code.canonical_string() == c.canonical_string()) found = true;
      }
    CHECK(found);
    if (applied > 12) break;
  }
  CHECK(applied > 0);
  CHECK(rejected == 0); // every enumerated variant embeds after a detour
}

TEST_CASE("omega3 sites appear on walks and the swap is involutive") {
  GaussCode c = GaussCode::parse(kTrefoil);
  auto theory = KnotTheory::preset("class+");
  WalkOptions wo;
  wo.crossing_cap = 8;
  bool found_triangle = false;
  for (uint64_t seed = 1; seed <= 40 && !found_triangle; ++seed) {
    auto walk = random_walk(c, theory, 6, seed, wo);
    FindOptions fo;
    fo.neutral = true;
    fo.decreasing = false;
    auto sites = find_moves(walk.code, theory, fo);
    for (auto& s : sites) {
      if (s.tag != MoveTag::Omega3b && s.tag != MoveTag::Omega3o) continue;
      found_triangle = true;
      auto once = apply_move(walk.code, s);
      auto twice = apply_move(once.code, s);
      CHECK(twice.code.canonical_string() == walk.code.canonical_string());
      CHECK(once.code.canonical_string() != walk.code.canonical_string());
      break;
    }
  }
  CHECK(found_triangle);
}

TEST_CASE("random walks are deterministic and replayable") {
  GaussCode c = GaussCode::parse(kTrefoil);
  auto theory = KnotTheory::preset("class+");
  auto w1 = random_walk(c, theory, 12, 42);
  auto w2 = random_walk(c, theory, 12, 42);
  CHECK(w1.code == w2.code);
  CHECK(trace_to_text(w1.trace) == trace_to_text(w2.trace));

  auto replayed = replay_trace(c, theory, trace_to_text(w1.trace));
  CHECK(replayed.code == w1.code);

  auto zero = random_walk(c, theory, 0, 7);
  CHECK(zero.code == c);
  CHECK(zero.trace.empty());
}

TEST_CASE("decreasing closure of the kinked unknot reaches the circle") {
  GaussCode c = GaussCode::parse(kKink);
  auto theory = KnotTheory::preset("class+");
  SearchBudget budget;
  GaussCode min = reduce_min(c, theory, budget);
  CHECK(min.crossing_count() == 0);
  CHECK(min.component_count() == 1);
  CHECK(min.str() == "()");
}

TEST_CASE("cc flips sign and roles") {
  GaussCode c = GaussCode::parse(kKink);
  MoveSite s;
  s.tag = MoveTag::CC;
  s.crossings = {1};
  auto r = apply_move(c, s);
  CHECK(r.code.sign(1) == -1);
  CHECK(r.code.components[0].passages[0].role == Role::Under);
  auto rr = apply_move(r.code, s);
  CHECK(rr.code == c);
}

TEST_CASE("bfs connects omega-equivalent diagrams") {
  GaussCode kinked = GaussCode::parse(kKink);
  GaussCode circle = GaussCode::parse("()");
  auto theory = KnotTheory::preset("class+");
  SearchBudget budget;
  budget.depth_cap = 6;
  auto res = bfs_connect(kinked, circle, theory, budget);
  CHECK(res.status == SearchStatus::Connected);

  GaussCode tre = GaussCode::parse(kTrefoil);
  budget.crossing_cap = 4;
  budget.depth_cap = 6;
  auto res2 = bfs_connect(tre, circle, theory, budget);
  CHECK(res2.status != SearchStatus::Connected);
}

TEST_CASE("delta move unknots the trefoil") {
  GaussCode tre = GaussCode::parse(kTrefoil);
  GaussCode circle = GaussCode::parse("()");
  auto theory = KnotTheory::preset("delta");
  SearchBudget budget;
  budget.crossing_cap = 7;
  budget.depth_cap = 14;
  budget.node_cap = 60000;
  auto res = bfs_connect(tre, circle, theory, budget);
  CHECK(res.status == SearchStatus::Connected);
}

TEST_CASE("flat moves apply to flat codes") {
  GaussCode f = GaussCode::parse("(F1+F2+F1+F2+)");
  auto theory = KnotTheory::preset("flat");
  // the 1212 flat code is reduced: no decreasing sites (its faces are quads)
  CHECK(find_moves(f, theory).empty());
  FindOptions fo;
  fo.increasing = true;
  auto sites = find_moves(f, theory, fo);
  CHECK(!sites.empty());
  // flat kinks go in and come out again
  bool ok = false;
  for (auto& s : sites) {
    if (s.tag != MoveTag::Omega1a || s.dir != Direction::Increasing) continue;
    auto r = apply_move(f, s);
    CHECK(r.code.flavor(r.created[0]) == Flavor::Flat);
    auto dec = find_moves(r.code, theory);
    for (auto& s2 : dec)
      if (s2.dir == Direction::Decreasing && s2.crossings == r.created) ok = true;
    break;
  }
  CHECK(ok);
  CHECK_THROWS_AS(find_moves(f, KnotTheory::preset("class+")), ClassError);
}

TEST_CASE("virtual trefoil walk preserves odd writhe crossing count parity") {
  GaussCode vt = GaussCode::parse("(O1+O2+U1+U2+)");
  auto theory = KnotTheory::preset("virt+");
  auto w = random_walk(vt, theory, 20, 5);
  CHECK(w.code.crossing_count() >= 2);
  // odd writhe is computed later by the traits module; here only structure
  w.code.validate();
}
