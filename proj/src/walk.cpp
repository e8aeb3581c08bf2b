#include "skein/walk.hpp"

#include <sstream>

namespace skein {

WalkResult random_walk(const GaussCode& start, const KnotTheory& theory, int length,
                       uint64_t seed, const WalkOptions& opts) {
  WalkResult res;
  res.code = start;
  std::set<int> ids;
  for (auto& [id, info] : start.crossings) ids.insert(id);
  res.composite = Correspondence::identity_on(ids);
  std::mt19937_64 rng(seed);
  for (int step = 0; step < length; ++step) {
    FindOptions fo;
    fo.decreasing = true;
    fo.neutral = true;
    fo.increasing = res.code.crossing_count() + 2 <= opts.crossing_cap;
    fo.increasing_cap = opts.increasing_cap;
    auto sites = find_moves(res.code, theory, fo);
    std::vector<MoveSite> usable;
    for (auto& s : sites) {
      if (!opts.allow_smoothing &&
          (s.tag == MoveTag::SmOr || s.tag == MoveTag::SmUnor || s.tag == MoveTag::SmA ||
           s.tag == MoveTag::SmB))
        continue;
      usable.push_back(s);
    }
    if (usable.empty()) break;
    // Increasing sites vastly outnumber the rest; pick the direction first.
    std::vector<MoveSite> dec, inc;
    for (auto& s : usable)
      (s.dir == Direction::Increasing ? inc : dec).push_back(s);
    std::vector<MoveSite>* pool;
    if (dec.empty()) pool = &inc;
    else if (inc.empty()) pool = &dec;
    else pool = rng() % 2 == 0 ? &dec : &inc;
    MoveSite chosen = (*pool)[rng() % pool->size()];
    MoveResult mr;
    try {
      mr = apply_move(res.code, chosen);
    } catch (const SiteError&) {
      continue; // a rejected increasing variant; try the next step
    }
    res.code = mr.code;
    res.composite = res.composite.then(mr.corr);
    res.trace.push_back({chosen, mr.corr});
  }
  return res;
}

std::string trace_to_text(const std::vector<WalkStep>& trace) {
  std::ostringstream out;
  for (auto& step : trace) out << step.site.str() << "\n";
  return out.str();
}

namespace {

MoveTag tag_from_name(const std::string& n) {
  for (int i = 0; i <= (int)MoveTag::TwoOmegaInf; ++i) {
    MoveTag t = (MoveTag)i;
    if (move_tag_name(t) == n) return t;
  }
  throw ParseError("unknown move tag: " + n);
}

} // namespace

WalkResult replay_trace(const GaussCode& start, const KnotTheory& theory,
                        const std::string& text) {
  WalkResult res;
  res.code = start;
  std::set<int> ids;
  for (auto& [id, info] : start.crossings) ids.insert(id);
  res.composite = Correspondence::identity_on(ids);

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    MoveSite site;
    auto at = line.find('@');
    if (at == std::string::npos || at < 2) throw ParseError("bad trace line: " + line);
    std::string head = line.substr(0, at);
    char dirc = head.back();
    site.dir = dirc == '+'   ? Direction::Increasing
               : dirc == '-' ? Direction::Decreasing
                             : Direction::Neutral;
    site.tag = tag_from_name(head.substr(0, head.size() - 1));
    std::string rest = line.substr(at + 1);
    auto hash = rest.find('#');
    if (hash != std::string::npos) {
      site.variant = std::stoi(rest.substr(hash + 1));
      rest = rest.substr(0, hash);
    }
    std::istringstream anchors(rest);
    std::string tok;
    while (std::getline(anchors, tok, ',')) {
      if (tok.empty()) continue;
      if (tok[0] == 'c') {
        site.crossings.push_back(std::stoi(tok.substr(1)));
      } else if (tok[0] == 'g') {
        auto dot = tok.find('.');
        site.gaps.push_back({std::stoi(tok.substr(1, dot - 1)), std::stoi(tok.substr(dot + 1))});
      } else {
        throw ParseError("bad trace anchor: " + tok);
      }
    }
    // Verify the site is live for decreasing/neutral moves.
    if (site.dir != Direction::Increasing) {
      FindOptions fo;
      fo.decreasing = true;
      fo.neutral = true;
      bool found = false;
      for (auto& s : find_moves(res.code, theory, fo)) {
        if (s.tag == site.tag && s.dir == site.dir && s.crossings == site.crossings &&
            s.gaps == site.gaps)
          found = true;
      }
      if (!found) throw SiteError("stale trace site: " + line);
    }
    MoveResult mr = apply_move(res.code, site);
    res.code = mr.code;
    res.composite = res.composite.then(mr.corr);
    res.trace.push_back({site, mr.corr});
  }
  return res;
}

} // namespace skein
