#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skein/gauss.hpp"

namespace skein {

enum class MoveTag : uint8_t {
  Omega1a,  // positive kink on the right side of the strand
  Omega1b,  // positive kink on the left side
  Omega2a,
  Omega2b,
  Omega2c,
  Omega2d,
  Omega3b,  // all-positive oriented third move
  Omega3o,  // the other oriented third-move variants
  VOmega1,
  VOmega2,
  VOmega3,
  SVOmega3,
  CC,
  Delta,
  Clasp,
  Flank,
  ForbiddenO,
  ForbiddenU,
  ForbiddenM,
  SmOr,
  SmUnor,
  SmA,
  SmB,
  CircleO1,   // add/remove a crossingless circle component
  CircleODelta,
  H2,
  H2o,
  TwoOmegaInf,
};

enum class Direction : uint8_t { Increasing, Decreasing, Neutral };

std::string move_tag_name(MoveTag t);

struct MoveSite {
  MoveTag tag;
  Direction dir = Direction::Neutral;
  std::vector<int> crossings; // pattern anchor for decreasing/neutral moves
  std::vector<CodePos> gaps;  // insertion anchors for increasing moves
  int variant = 0;
  std::string str() const;
};

// Partial bijection of crossing ids across a move: identity on survivors.
struct Correspondence {
  std::map<int, int> fwd;
  std::optional<int> map(int crossing) const {
    auto it = fwd.find(crossing);
    if (it == fwd.end()) return std::nullopt;
    return it->second;
  }
  static Correspondence identity_on(const std::set<int>& ids);
  Correspondence then(const Correspondence& next) const;
};

struct KnotTheory {
  std::string name;
  std::set<MoveTag> moves;
  bool flat_world = false; // diagrams considered modulo crossing change
  bool has(MoveTag t) const { return moves.count(t) > 0; }
  static KnotTheory preset(const std::string& name);
};

struct FindOptions {
  bool increasing = false;
  int increasing_cap = 64; // per move kind
  bool decreasing = true;
  bool neutral = false;
};

std::vector<MoveSite> find_moves(const GaussCode& code, const KnotTheory& theory,
                                 const FindOptions& opts = {});

struct MoveResult {
  GaussCode code;
  Correspondence corr;
  std::vector<int> created;
};

MoveResult apply_move(const GaussCode& code, const MoveSite& site);

} // namespace skein
