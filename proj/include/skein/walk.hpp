#pragma once

#include <cstdint>
#include <random>

#include "skein/moves.hpp"

namespace skein {

struct WalkStep {
  MoveSite site;
  Correspondence corr;
};

struct WalkResult {
  GaussCode code;
  std::vector<WalkStep> trace;
  Correspondence composite;
};

struct WalkOptions {
  int crossing_cap = 12;   // refuse increases past this many crossings
  int increasing_cap = 48; // sampled increasing sites per step
  bool allow_smoothing = false;
};

WalkResult random_walk(const GaussCode& start, const KnotTheory& theory, int length,
                       uint64_t seed, const WalkOptions& opts = {});

std::string trace_to_text(const std::vector<WalkStep>& trace);

// Replays a serialized trace against `start`; throws SiteError on stale sites.
WalkResult replay_trace(const GaussCode& start, const KnotTheory& theory,
                        const std::string& text);

} // namespace skein
