#pragma once

#include "skein/moves.hpp"

namespace skein {

enum class SearchStatus { Connected, ExhaustedUnequal, Inconclusive };

struct SearchResult {
  SearchStatus status = SearchStatus::Inconclusive;
  long long explored = 0;
};

struct SearchBudget {
  int crossing_cap = 8;   // absolute cap on crossings of explored diagrams
  int depth_cap = 16;     // total path length (both directions combined)
  long long node_cap = 20000;
  int increasing_cap = 24;
};

// Bidirectional bounded search in the move graph of `theory`.
SearchResult bfs_connect(const GaussCode& a, const GaussCode& b, const KnotTheory& theory,
                         const SearchBudget& budget);

// Greedy-then-breadth reduction to a representative with the fewest
// crossings reachable within the budget (decreasing and neutral moves plus
// short detours).
GaussCode reduce_min(const GaussCode& code, const KnotTheory& theory, const SearchBudget& budget);

} // namespace skein
