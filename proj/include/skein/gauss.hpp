#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

enum class Role : uint8_t { Over, Under };
enum class Flavor : uint8_t { Classical, Flat, Singular };

inline Role flip(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

struct Passage {
  int crossing = 0;
  Role role = Role::Over;
  bool operator==(const Passage&) const = default;
};

struct CrossingInfo {
  int sign = 1; // +1 or -1
  Flavor flavor = Flavor::Classical;
  bool operator==(const CrossingInfo&) const = default;
};

struct CodePos {
  int comp = 0;
  int idx = 0;
  bool operator==(const CodePos&) const = default;
  auto operator<=>(const CodePos&) const = default;
};

// Per-component signed passage sequence. Flat and singular crossings are
// stored as an arbitrary over/under lift; the pair (roles, sign) is taken
// modulo the simultaneous flip (swap roles, negate sign), which the
// serializer resolves by putting the first-read passage on top.
class GaussCode {
public:
  struct Component {
    bool closed = true;
    std::vector<Passage> passages;
    bool operator==(const Component&) const = default;
  };

  std::vector<Component> components;
  std::map<int, CrossingInfo> crossings;

  static GaussCode parse(const std::string& text);
  std::string str() const;

  void validate() const;

  int crossing_count() const { return (int)crossings.size(); }
  int component_count() const { return (int)components.size(); }
  bool empty() const;

  int sign(int crossing) const { return crossings.at(crossing).sign; }
  Flavor flavor(int crossing) const { return crossings.at(crossing).flavor; }
  int fresh_id() const;

  const Passage& at(CodePos p) const { return components[p.comp].passages[p.idx]; }
  Passage& at(CodePos p) { return components[p.comp].passages[p.idx]; }
  int comp_size(int c) const { return (int)components[c].passages.size(); }

  // Next/previous position along the strand; for long components returns
  // nullopt past the ends.
  std::optional<CodePos> next(CodePos p) const;
  std::optional<CodePos> prev(CodePos p) const;

  // Both positions of a crossing, in traversal order (component order, then
  // position within the component).
  std::pair<CodePos, CodePos> positions(int crossing) const;
  // Component index of the Over passage, then of the Under passage.
  std::pair<int, int> over_under_components(int crossing) const;

  // Count of passages strictly between the two passages of a crossing,
  // walking forward from the first; requires a single closed component.
  int passages_between(int crossing) const;

  GaussCode mirror() const;
  GaussCode reversed() const;
  static GaussCode disjoint_union(const GaussCode& a, const GaussCode& b);

  // Forget over/under data: every classical crossing becomes flat.
  GaussCode shadow() const;

  // Relabel crossings by first appearance and rotate closed components to
  // the lexicographically least serialization. Component order is kept.
  GaussCode normalized() const;
  std::string canonical_string() const { return normalized().str(); }

  // Editing primitives used by the move engine. Positions refer to the
  // current state; inserting shifts later positions.
  void erase_positions(const std::vector<CodePos>& ps);
  void insert_passages(CodePos at, const std::vector<Passage>& ps);
  void remove_crossing_entry(int crossing);

  // Splice for smoothings: positions p, q are the two passages of a
  // crossing (p before q in traversal order).
  // oriented_split: same component, respects orientation.
  void smooth_oriented(int crossing);
  void smooth_unoriented(int crossing);

  bool operator==(const GaussCode&) const = default;
};

} // namespace skein
