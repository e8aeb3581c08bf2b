#include "skein/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skein {

namespace {

char role_letter(Role r) { return r == Role::Over ? 'O' : 'U'; }

char flavor_letter(Flavor f) {
  switch (f) {
    case Flavor::Classical: return '?';
    case Flavor::Flat: return 'F';
    default: return 'S';
  }
}

} // namespace

bool GaussCode::empty() const {
  return components.empty();
}

int GaussCode::fresh_id() const {
  int id = 1;
  if (!crossings.empty()) id = crossings.rbegin()->first + 1;
  return id;
}

GaussCode GaussCode::parse(const std::string& text) {
  GaussCode code;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, i); };

  // First pass: raw (letter, id, sign) triples per component.
  struct RawPassage { char letter; int id; int sign; };
  std::vector<std::pair<bool, std::vector<RawPassage>>> comps;

  skip_ws();
  bool expect_component = true;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    char open = text[i];
    if (open != '(' && open != '[') fail("expected '(' or '['");
    if (!expect_component) fail("expected '|' between components");
    bool closed = open == '(';
    char close = closed ? ')' : ']';
    ++i;
    std::vector<RawPassage> raw;
    while (true) {
      skip_ws();
      if (i >= text.size()) fail("unterminated component");
      if (text[i] == close) { ++i; break; }
      char letter = text[i];
      if (letter != 'O' && letter != 'U' && letter != 'F' && letter != 'S')
        fail("expected passage letter O/U/F/S");
      ++i;
      skip_ws();
      if (i >= text.size() || !std::isdigit((unsigned char)text[i])) fail("expected crossing id");
      int id = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        id = id * 10 + (text[i] - '0');
        ++i;
      }
      skip_ws();
      if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail("expected sign + or -");
      int sign = text[i] == '+' ? 1 : -1;
      ++i;
      raw.push_back({letter, id, sign});
    }
    comps.emplace_back(closed, std::move(raw));
    skip_ws();
    expect_component = false;
    if (i < text.size()) {
      if (text[i] != '|') fail("expected '|' between components");
      ++i;
      expect_component = true;
    }
  }
  if (expect_component && !comps.empty()) fail("trailing '|'");

  // Second pass: build passages, resolving flat/singular lifts.
  std::map<int, int> seen; // crossing -> number of passages consumed
  for (auto& [closed, raw] : comps) {
    Component comp;
    comp.closed = closed;
    for (auto& rp : raw) {
      Flavor fl = rp.letter == 'F'   ? Flavor::Flat
                  : rp.letter == 'S' ? Flavor::Singular
                                     : Flavor::Classical;
      Role role;
      if (fl == Flavor::Classical) {
        role = rp.letter == 'O' ? Role::Over : Role::Under;
      } else {
        role = seen[rp.id] == 0 ? Role::Over : Role::Under;
      }
      auto it = code.crossings.find(rp.id);
      if (it == code.crossings.end()) {
        code.crossings[rp.id] = {rp.sign, fl};
      } else {
        if (it->second.flavor != fl)
          throw ParseError("crossing " + std::to_string(rp.id) + ": flavor mismatch", i);
        if (it->second.sign != rp.sign)
          throw ParseError("crossing " + std::to_string(rp.id) + ": sign mismatch", i);
      }
      seen[rp.id]++;
      comp.passages.push_back({rp.id, role});
    }
    code.components.push_back(std::move(comp));
  }
  code.validate();
  return code;
}

void GaussCode::validate() const {
  std::map<int, std::vector<Role>> occur;
  for (auto& comp : components)
    for (auto& p : comp.passages) {
      if (!crossings.count(p.crossing))
        throw ValidationError("passage references unknown crossing " + std::to_string(p.crossing));
      occur[p.crossing].push_back(p.role);
    }
  if (occur.size() != crossings.size())
    throw ValidationError("crossing table entry without passages");
  for (auto& [id, roles] : occur) {
    if (roles.size() != 2)
      throw ValidationError("crossing " + std::to_string(id) + " must occur exactly twice");
    if (roles[0] == roles[1])
      throw ValidationError("crossing " + std::to_string(id) + ": role collision (needs one Over and one Under)");
    auto& info = crossings.at(id);
    if (info.sign != 1 && info.sign != -1)
      throw ValidationError("crossing " + std::to_string(id) + ": invalid sign");
  }
}

std::string GaussCode::str() const {
  std::ostringstream out;
  std::map<int, int> seen;
  bool first_comp = true;
  for (auto& comp : components) {
    if (!first_comp) out << "|";
    first_comp = false;
    out << (comp.closed ? "(" : "[");
    for (auto& p : comp.passages) {
      const auto& info = crossings.at(p.crossing);
      int rendered_sign = info.sign;
      if (info.flavor == Flavor::Classical) {
        out << role_letter(p.role);
      } else {
        out << flavor_letter(info.flavor);
        // First-read passage is the canonical over strand of the lift.
        if (seen[p.crossing] == 0 && p.role == Role::Under) rendered_sign = -rendered_sign;
        if (seen[p.crossing] == 1) {
          auto [fp, sp] = positions(p.crossing);
          (void)sp;
          if (at(fp).role == Role::Under) rendered_sign = -rendered_sign;
        }
      }
      out << p.crossing << (rendered_sign > 0 ? '+' : '-');
      seen[p.crossing]++;
    }
    out << (comp.closed ? ")" : "]");
  }
  return out.str();
}

std::optional<CodePos> GaussCode::next(CodePos p) const {
  const auto& comp = components[p.comp];
  int n = (int)comp.passages.size();
  if (p.idx + 1 < n) return CodePos{p.comp, p.idx + 1};
  if (comp.closed && n > 0) return CodePos{p.comp, 0};
  return std::nullopt;
}

std::optional<CodePos> GaussCode::prev(CodePos p) const {
  const auto& comp = components[p.comp];
  int n = (int)comp.passages.size();
  if (p.idx > 0) return CodePos{p.comp, p.idx - 1};
  if (comp.closed && n > 0) return CodePos{p.comp, n - 1};
  return std::nullopt;
}

std::pair<CodePos, CodePos> GaussCode::positions(int crossing) const {
  std::vector<CodePos> found;
  for (int c = 0; c < (int)components.size(); ++c)
    for (int k = 0; k < (int)components[c].passages.size(); ++k)
      if (components[c].passages[k].crossing == crossing) found.push_back({c, k});
  if (found.size() != 2)
    throw ValidationError("crossing " + std::to_string(crossing) + " does not occur twice");
  return {found[0], found[1]};
}

std::pair<int, int> GaussCode::over_under_components(int crossing) const {
  auto [p, q] = positions(crossing);
  if (at(p).role == Role::Over) return {p.comp, q.comp};
  return {q.comp, p.comp};
}

int GaussCode::passages_between(int crossing) const {
  if (components.size() != 1 || !components[0].closed)
    throw ClassError("passages_between requires a one-component closed code");
  auto [p, q] = positions(crossing);
  return q.idx - p.idx - 1;
}

GaussCode GaussCode::mirror() const {
  GaussCode r = *this;
  for (auto& comp : r.components)
    for (auto& p : comp.passages) p.role = flip(p.role);
  for (auto& [id, info] : r.crossings) info.sign = -info.sign;
  return r;
}

GaussCode GaussCode::reversed() const {
  GaussCode r = *this;
  for (auto& comp : r.components)
    std::reverse(comp.passages.begin(), comp.passages.end());
  return r;
}

GaussCode GaussCode::disjoint_union(const GaussCode& a, const GaussCode& b) {
  GaussCode r = a;
  int offset = a.crossings.empty() ? 0 : a.crossings.rbegin()->first;
  for (auto& comp : b.components) {
    Component c = comp;
    for (auto& p : c.passages) p.crossing += offset;
    r.components.push_back(std::move(c));
  }
  for (auto& [id, info] : b.crossings) r.crossings[id + offset] = info;
  return r;
}

GaussCode GaussCode::shadow() const {
  GaussCode r = *this;
  for (auto& [id, info] : r.crossings)
    if (info.flavor == Flavor::Classical) info.flavor = Flavor::Flat;
  return r;
}

GaussCode GaussCode::normalized() const {
  // Enumerate rotation tuples of closed components; keep the least string.
  std::vector<int> sizes;
  long long combos = 1;
  for (auto& comp : components) {
    int n = comp.closed ? std::max<int>(1, (int)comp.passages.size()) : 1;
    sizes.push_back(n);
    combos *= n;
  }
  std::string best;
  GaussCode best_code;
  std::vector<int> rot(components.size(), 0);
  for (long long k = 0; k < combos; ++k) {
    long long v = k;
    for (size_t c = 0; c < rot.size(); ++c) {
      rot[c] = (int)(v % sizes[c]);
      v /= sizes[c];
    }
    GaussCode cand = *this;
    for (size_t c = 0; c < rot.size(); ++c) {
      if (rot[c] == 0) continue;
      auto& ps = cand.components[c].passages;
      std::rotate(ps.begin(), ps.begin() + rot[c], ps.end());
    }
    // Relabel by first appearance.
    std::map<int, int> relabel;
    int next_id = 1;
    GaussCode out;
    out.components.resize(cand.components.size());
    for (size_t c = 0; c < cand.components.size(); ++c) {
      out.components[c].closed = cand.components[c].closed;
      for (auto& p : cand.components[c].passages) {
        auto it = relabel.find(p.crossing);
        if (it == relabel.end()) it = relabel.emplace(p.crossing, next_id++).first;
        out.components[c].passages.push_back({it->second, p.role});
      }
    }
    for (auto& [old_id, new_id] : relabel) out.crossings[new_id] = cand.crossings.at(old_id);
    std::string s = out.str();
    if (best.empty() || s < best) {
      best = s;
      best_code = std::move(out);
    }
  }
  if (best.empty()) {
    // No components at all.
    return *this;
  }
  // Canonicalize internal flat lifts via round trip.
  return parse(best);
}

void GaussCode::erase_positions(const std::vector<CodePos>& ps) {
  std::vector<CodePos> sorted = ps;
  std::sort(sorted.begin(), sorted.end());
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it)
    components[it->comp].passages.erase(components[it->comp].passages.begin() + it->idx);
}

void GaussCode::insert_passages(CodePos at, const std::vector<Passage>& ps) {
  auto& v = components[at.comp].passages;
  v.insert(v.begin() + at.idx, ps.begin(), ps.end());
}

void GaussCode::remove_crossing_entry(int crossing) {
  crossings.erase(crossing);
}

namespace {

// Reverse a block of passages in place, flipping signs of crossings with
// exactly one passage inside the block.
void reverse_block(std::vector<Passage>& block, GaussCode& code) {
  std::map<int, int> inside;
  for (auto& p : block) inside[p.crossing]++;
  for (auto& [id, cnt] : inside)
    if (cnt == 1) code.crossings.at(id).sign = -code.crossings.at(id).sign;
  std::reverse(block.begin(), block.end());
}

} // namespace

void GaussCode::smooth_oriented(int crossing) {
  auto [p, q] = positions(crossing);
  if (p.comp == q.comp) {
    auto& comp = components[p.comp];
    std::vector<Passage> between(comp.passages.begin() + p.idx + 1,
                                 comp.passages.begin() + q.idx);
    std::vector<Passage> rest;
    rest.insert(rest.end(), comp.passages.begin(), comp.passages.begin() + p.idx);
    rest.insert(rest.end(), comp.passages.begin() + q.idx + 1, comp.passages.end());
    if (comp.closed) {
      comp.passages = rest;
      Component loop;
      loop.closed = true;
      loop.passages = between;
      components.insert(components.begin() + p.comp + 1, loop);
    } else {
      comp.passages = rest; // long part keeps its ends
      Component loop;
      loop.closed = true;
      loop.passages = between;
      components.insert(components.begin() + p.comp + 1, loop);
    }
  } else {
    // Merge the two components at the crossing.
    int ca = p.comp, cb = q.comp;
    auto& A = components[ca];
    auto& B = components[cb];
    std::vector<Passage> merged;
    if (B.closed) {
      merged.insert(merged.end(), A.passages.begin(), A.passages.begin() + p.idx);
      merged.insert(merged.end(), B.passages.begin() + q.idx + 1, B.passages.end());
      merged.insert(merged.end(), B.passages.begin(), B.passages.begin() + q.idx);
      merged.insert(merged.end(), A.passages.begin() + p.idx + 1, A.passages.end());
      A.passages = merged;
      components.erase(components.begin() + cb);
    } else if (A.closed) {
      // Long component B absorbs the closed component A.
      merged.insert(merged.end(), B.passages.begin(), B.passages.begin() + q.idx);
      merged.insert(merged.end(), A.passages.begin() + p.idx + 1, A.passages.end());
      merged.insert(merged.end(), A.passages.begin(), A.passages.begin() + p.idx);
      merged.insert(merged.end(), B.passages.begin() + q.idx + 1, B.passages.end());
      B.passages = merged;
      components.erase(components.begin() + ca);
    } else {
      // Two long components: reconnect tails.
      std::vector<Passage> first(A.passages.begin(), A.passages.begin() + p.idx);
      first.insert(first.end(), B.passages.begin() + q.idx + 1, B.passages.end());
      std::vector<Passage> second(B.passages.begin(), B.passages.begin() + q.idx);
      second.insert(second.end(), A.passages.begin() + p.idx + 1, A.passages.end());
      A.passages = first;
      B.passages = second;
    }
  }
  remove_crossing_entry(crossing);
}

void GaussCode::smooth_unoriented(int crossing) {
  auto [p, q] = positions(crossing);
  if (p.comp == q.comp) {
    auto& comp = components[p.comp];
    std::vector<Passage> between(comp.passages.begin() + p.idx + 1,
                                 comp.passages.begin() + q.idx);
    reverse_block(between, *this);
    std::vector<Passage> merged;
    merged.insert(merged.end(), comp.passages.begin(), comp.passages.begin() + p.idx);
    merged.insert(merged.end(), between.begin(), between.end());
    merged.insert(merged.end(), comp.passages.begin() + q.idx + 1, comp.passages.end());
    comp.passages = merged;
  } else {
    int ca = p.comp, cb = q.comp;
    auto& A = components[ca];
    auto& B = components[cb];
    if (!A.closed && !B.closed)
      throw SiteError("unoriented smoothing of two long components is not supported");
    if (B.closed) {
      std::vector<Passage> other;
      other.insert(other.end(), B.passages.begin() + q.idx + 1, B.passages.end());
      other.insert(other.end(), B.passages.begin(), B.passages.begin() + q.idx);
      reverse_block(other, *this);
      std::vector<Passage> merged;
      merged.insert(merged.end(), A.passages.begin(), A.passages.begin() + p.idx);
      merged.insert(merged.end(), other.begin(), other.end());
      merged.insert(merged.end(), A.passages.begin() + p.idx + 1, A.passages.end());
      A.passages = merged;
      components.erase(components.begin() + cb);
    } else {
      // A closed, B long: reverse the closed component into B.
      std::vector<Passage> other;
      other.insert(other.end(), A.passages.begin() + p.idx + 1, A.passages.end());
      other.insert(other.end(), A.passages.begin(), A.passages.begin() + p.idx);
      reverse_block(other, *this);
      std::vector<Passage> merged;
      merged.insert(merged.end(), B.passages.begin(), B.passages.begin() + q.idx);
      merged.insert(merged.end(), other.begin(), other.end());
      merged.insert(merged.end(), B.passages.begin() + q.idx + 1, B.passages.end());
      B.passages = merged;
      components.erase(components.begin() + ca);
    }
  }
  remove_crossing_entry(crossing);
}

} // namespace skein
