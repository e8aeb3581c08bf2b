#include "skein/traits.hpp"

#include <sstream>

namespace skein {

std::map<int, std::pair<int, int>> component_index(const GaussCode& code) {
  std::map<int, std::pair<int, int>> out;
  for (auto& [id, info] : code.crossings) {
    auto [over, under] = code.over_under_components(id);
    out[id] = {over + 1, under + 1};
  }
  return out;
}

std::map<int, int> order_index(const GaussCode& code) {
  std::map<int, int> out;
  for (auto& [id, info] : code.crossings) {
    auto [p, q] = code.positions(id);
    if (p.comp != q.comp || code.components[p.comp].closed) {
      out[id] = 0;
      continue;
    }
    // p precedes q; early undercrossing means the first passage is under.
    out[id] = code.at(p).role == Role::Under ? -1 : 1;
  }
  return out;
}

std::map<int, int> gaussian_parity(const GaussCode& code) {
  std::map<int, int> out;
  for (auto& [id, info] : code.crossings) out[id] = code.passages_between(id) % 2;
  return out;
}

std::map<int, long long> affine_index(const GaussCode& code) {
  if (code.component_count() != 1 || !code.components[0].closed)
    throw ClassError("affine index needs a one-component closed code");
  std::map<int, long long> out;
  const auto& ps = code.components[0].passages;
  int n = (int)ps.size();
  std::map<int, std::pair<int, int>> where; // crossing -> (over pos, under pos)
  for (int i = 0; i < n; ++i) {
    if (ps[i].role == Role::Over) where[ps[i].crossing].first = i;
    else where[ps[i].crossing].second = i;
  }
  for (auto& [c, pos] : where) {
    auto [oc, uc] = pos;
    long long ind = 0;
    auto inside = [&](int x, int from, int to) {
      // strictly between from and to cyclically
      if (from < to) return x > from && x < to;
      return x > from || x < to;
    };
    for (auto& [d, dp] : where) {
      if (d == c) continue;
      bool o_in = inside(dp.first, oc, uc);
      bool u_in = inside(dp.second, oc, uc);
      if (o_in == u_in) continue; // not interleaved
      ind += code.sign(d) * (o_in ? 1 : -1);
    }
    out[c] = ind;
  }
  return out;
}

Laurent affine_index_polynomial(const GaussCode& code) {
  Laurent p;
  auto ind = affine_index(code);
  for (auto& [c, v] : ind) {
    long long s = code.sign(c);
    p += Laurent::monomial(s, v) - Laurent::monomial(s, 0);
  }
  return p;
}

long long odd_writhe(const GaussCode& code) {
  long long w = 0;
  auto par = gaussian_parity(code);
  for (auto& [c, v] : par)
    if (v == 1) w += code.sign(c);
  return w;
}

long long writhe(const GaussCode& code) {
  long long w = 0;
  for (auto& [id, info] : code.crossings)
    if (info.flavor == Flavor::Classical) w += info.sign;
  return w;
}

// --- surface data -------------------------------------------------------------

namespace {

struct VertexPassages {
  // in-ends of the two passages in traversal order (strand order)
  std::vector<std::pair<int, int>> passes; // (in_end, out_end)
};

// in-ends per vertex in strand traversal order, with the strand index.
struct PassageInfo {
  std::vector<int> in_ends;
  std::vector<int> strand;
};
std::map<int, PassageInfo> passage_in_ends(const SurfaceDiagram& d) {
  std::map<int, PassageInfo> out;
  auto strands = d.strands();
  for (size_t si = 0; si < strands.size(); ++si) {
    for (int u : strands[si].out_ends) {
      int arrive = d.pair_[u];
      if (d.vertices[d.vert_of_[arrive]].endpoint) continue;
      out[d.vert_of_[arrive]].in_ends.push_back(arrive);
      out[d.vert_of_[arrive]].strand.push_back((int)si);
    }
  }
  return out;
}

HomClass walk_class(const SurfaceDiagram& d, int from_in_end, int to_in_end) {
  // Class of the strand path leaving via opposite(from_in_end) until it
  // arrives at to_in_end.
  HomClass h = hom_zero(d.surface.rank());
  int out = d.opposite(from_in_end);
  while (true) {
    h = hom_add(h, d.wall_[out]);
    int a = d.pair_[out];
    if (a == to_in_end) break;
    out = d.opposite(a);
  }
  return h;
}

} // namespace

std::map<int, HomClass> homotopy_index(const SurfaceDiagram& d) {
  std::map<int, HomClass> out;
  auto ins = passage_in_ends(d);
  for (auto& [v, info] : ins) {
    const auto& arr = info.in_ends;
    if (arr.size() != 2 || info.strand[0] != info.strand[1]) continue;
    const auto& vx = d.vertices[v];
    if (vx.flavor != Flavor::Classical) continue;
    // under-to-over half: starts at the under passage.
    int under_in = d.is_over_end(arr[0]) ? arr[1] : arr[0];
    int over_in = d.is_over_end(arr[0]) ? arr[0] : arr[1];
    out[v] = walk_class(d, under_in, over_in);
  }
  return out;
}

std::map<int, HomClass> flat_homotopy_index(const SurfaceDiagram& d) {
  std::map<int, HomClass> out;
  auto ins = passage_in_ends(d);
  for (auto& [v, info] : ins) {
    const auto& arr = info.in_ends;
    if (arr.size() != 2 || info.strand[0] != info.strand[1]) continue;
    // left half: the half whose exit is the ccw neighbour of the other exit.
    int out1 = d.opposite(arr[0]);
    int out2 = d.opposite(arr[1]);
    bool first_left = d.slot_of_[out1] == (d.slot_of_[out2] + 1) % 4;
    // The half exiting via out1 continues from arr[0] and returns at arr[1].
    if (first_left) out[v] = walk_class(d, arr[0], arr[1]);
    else out[v] = walk_class(d, arr[1], arr[0]);
  }
  return out;
}

std::map<int, long long> based_index(const SurfaceDiagram& d) {
  std::map<int, long long> out;
  auto f = d.faces();
  auto p = d.potentials(f);
  for (int v = 0; v < (int)d.vertices.size(); ++v) {
    const auto& vx = d.vertices[v];
    if (vx.rot.empty() || vx.endpoint) continue;
    int corner = -1;
    for (int e : vx.rot)
      if (d.inward_[e] && d.inward_[d.sigma(e)]) corner = e;
    if (corner < 0) throw ValidationError("crossing without an in-in sector");
    out[v] = d.corner_potential(f, p, corner);
  }
  return out;
}

std::map<int, int> unoriented_based_index(const SurfaceDiagram& d) {
  std::map<int, int> out;
  auto f = d.faces();
  auto p = d.potentials(f);
  for (int v = 0; v < (int)d.vertices.size(); ++v) {
    const auto& vx = d.vertices[v];
    if (vx.rot.empty() || vx.endpoint) continue;
    // sector from an over end to the ccw-next under end
    int corner = -1;
    for (int e : vx.rot)
      if (d.is_over_end(e) && !d.is_over_end(d.sigma(e))) {
        corner = e;
        break;
      }
    if (corner < 0) throw ValidationError("crossing without an over-under sector");
    long long val = d.corner_potential(f, p, corner);
    out[v] = (int)(((val % 2) + 2) % 2);
  }
  return out;
}

// --- binary traits --------------------------------------------------------------

std::map<int, int> BinaryTrait::labels(const GaussCode&) const {
  throw ClassError("trait " + descriptor() + " is not defined on Gauss codes");
}

std::map<int, int> BinaryTrait::labels_map(const SurfaceDiagram&) const {
  throw ClassError("trait " + descriptor() + " is not defined on surface diagrams");
}

namespace {

struct ConstantTrait : BinaryTrait {
  int value;
  explicit ConstantTrait(int v) : value(v) {}
  std::string descriptor() const override { return "constant:" + std::to_string(value); }
  std::map<int, int> labels(const GaussCode& code) const override {
    std::map<int, int> out;
    for (auto& [id, info] : code.crossings) out[id] = value;
    return out;
  }
  std::map<int, int> labels_map(const SurfaceDiagram& d) const override {
    std::map<int, int> out;
    for (int v = 0; v < (int)d.vertices.size(); ++v)
      if (!d.vertices[v].rot.empty() && !d.vertices[v].endpoint) out[v] = value;
    return out;
  }
};

struct GaussParityTrait : BinaryTrait {
  std::string descriptor() const override { return "gaussian-parity"; }
  std::map<int, int> labels(const GaussCode& code) const override {
    return gaussian_parity(code);
  }
};

struct SignTrait : BinaryTrait {
  std::string descriptor() const override { return "sign01"; }
  std::map<int, int> labels(const GaussCode& code) const override {
    std::map<int, int> out;
    for (auto& [id, info] : code.crossings) out[id] = info.sign > 0 ? 0 : 1;
    return out;
  }
};

struct AffineThresholdTrait : BinaryTrait {
  std::string descriptor() const override { return "affine-threshold"; }
  std::map<int, int> labels(const GaussCode& code) const override {
    std::map<int, int> out;
    for (auto& [id, v] : affine_index(code)) out[id] = v >= 0 ? 0 : 1;
    return out;
  }
};

struct NotTrait : BinaryTrait {
  BinaryTraitPtr base;
  explicit NotTrait(BinaryTraitPtr b) : base(std::move(b)) {}
  std::string descriptor() const override { return "not(" + base->descriptor() + ")"; }
  bool needs_surface() const override { return base->needs_surface(); }
  std::map<int, int> labels(const GaussCode& code) const override {
    auto out = base->labels(code);
    for (auto& [k, v] : out) v = 1 - v;
    return out;
  }
  std::map<int, int> labels_map(const SurfaceDiagram& d) const override {
    auto out = base->labels_map(d);
    for (auto& [k, v] : out) v = 1 - v;
    return out;
  }
};

struct SumTrait : BinaryTrait {
  BinaryTraitPtr a, b;
  SumTrait(BinaryTraitPtr x, BinaryTraitPtr y) : a(std::move(x)), b(std::move(y)) {}
  std::string descriptor() const override {
    return "sum(" + a->descriptor() + "," + b->descriptor() + ")";
  }
  bool needs_surface() const override { return a->needs_surface() || b->needs_surface(); }
  std::map<int, int> labels(const GaussCode& code) const override {
    auto la = a->labels(code);
    auto lb = b->labels(code);
    for (auto& [k, v] : la) v = (v + lb.at(k)) % 2;
    return la;
  }
  std::map<int, int> labels_map(const SurfaceDiagram& d) const override {
    auto la = a->labels_map(d);
    auto lb = b->labels_map(d);
    for (auto& [k, v] : la) v = (v + lb.at(k)) % 2;
    return la;
  }
};

struct MatrixTraitImpl : BinaryTrait {
  TraitMatrices m;
  explicit MatrixTraitImpl(TraitMatrices mm) : m(std::move(mm)) {}
  std::string descriptor() const override {
    std::ostringstream out;
    out << "matrix:k" << m.c_plus.size();
    return out.str();
  }
  std::map<int, int> labels(const GaussCode& code) const override {
    std::map<int, int> out;
    auto comps = component_index(code);
    auto ord = order_index(code);
    int k = (int)m.c_plus.size();
    for (auto& [id, info] : code.crossings) {
      auto [i, j] = comps.at(id);
      if (i > k || j > k) throw ClassError("matrix trait: component count exceeds k");
      const auto& c = info.sign > 0 ? m.c_plus : m.c_minus;
      const auto& u = info.sign > 0 ? m.u_plus : m.u_minus;
      int val = c[i - 1][j - 1];
      if (i == j && ord.at(id) == -1) val = (val + u[i - 1]) % 2;
      out[id] = val;
    }
    return out;
  }
};

struct HomThresholdTrait : BinaryTrait {
  std::vector<long long> phi;
  bool flat;
  HomThresholdTrait(std::vector<long long> f, bool fl) : phi(std::move(f)), flat(fl) {}
  std::string descriptor() const override {
    std::ostringstream out;
    out << (flat ? "flat-hom" : "hom") << ":";
    for (size_t i = 0; i < phi.size(); ++i) out << (i ? "," : "") << phi[i];
    return out.str();
  }
  bool needs_surface() const override { return true; }
  std::map<int, int> labels_map(const SurfaceDiagram& d) const override {
    auto h = flat ? flat_homotopy_index(d) : homotopy_index(d);
    std::map<int, int> out;
    for (auto& [v, cls] : h) {
      long long val = 0;
      for (size_t i = 0; i < phi.size(); ++i) val += phi[i] * cls[i];
      out[v] = val >= 0 ? 0 : 1;
    }
    return out;
  }
};

struct RoughOrderTrait : BinaryTrait {
  std::vector<std::vector<int>> blocks; // partition of 1..n, ordered
  std::vector<int> eps;
  std::map<int, int> omega;
  RoughOrderTrait(std::vector<std::vector<int>> b, std::vector<int> e, std::map<int, int> o)
      : blocks(std::move(b)), eps(std::move(e)), omega(std::move(o)) {}
  std::string descriptor() const override { return "rough-order"; }
  int block_of(int comp) const {
    for (size_t k = 0; k < blocks.size(); ++k)
      for (int c : blocks[k])
        if (c == comp) return (int)k;
    throw ClassError("rough order: component outside the splitting");
  }
  std::map<int, int> labels(const GaussCode& code) const override {
    auto comps = component_index(code);
    auto ord = order_index(code);
    std::map<int, int> out;
    for (auto& [id, info] : code.crossings) {
      auto [i, j] = comps.at(id);
      int bi = block_of(i), bj = block_of(j);
      if (bi == bj) {
        int o = ord.at(id);
        int w = omega.count(i) ? omega.at(i) : 0;
        out[id] = (eps[bi] + (o == -1 ? w : 0)) % 2;
      } else {
        out[id] = bi > bj ? 0 : 1;
      }
    }
    return out;
  }
};

struct FixedLabelsTrait : BinaryTrait {
  std::map<int, int> fixed;
  explicit FixedLabelsTrait(std::map<int, int> f) : fixed(std::move(f)) {}
  std::string descriptor() const override { return "fixed-labels"; }
  std::map<int, int> labels(const GaussCode& code) const override {
    std::map<int, int> out;
    for (auto& [id, info] : code.crossings) out[id] = fixed.at(id);
    return out;
  }
  std::map<int, int> labels_map(const SurfaceDiagram& d) const override {
    std::map<int, int> out;
    for (int v = 0; v < (int)d.vertices.size(); ++v)
      if (!d.vertices[v].rot.empty() && !d.vertices[v].endpoint) out[v] = fixed.at(v);
    return out;
  }
};

} // namespace

BinaryTraitPtr constant_trait(int value) { return std::make_shared<ConstantTrait>(value); }
BinaryTraitPtr gaussian_parity_trait() { return std::make_shared<GaussParityTrait>(); }
BinaryTraitPtr sign_trait01() { return std::make_shared<SignTrait>(); }
BinaryTraitPtr affine_threshold_trait() { return std::make_shared<AffineThresholdTrait>(); }
BinaryTraitPtr not_trait(BinaryTraitPtr base) { return std::make_shared<NotTrait>(std::move(base)); }
BinaryTraitPtr sum_trait(BinaryTraitPtr a, BinaryTraitPtr b) {
  return std::make_shared<SumTrait>(std::move(a), std::move(b));
}
BinaryTraitPtr matrix_trait(const TraitMatrices& m) { return std::make_shared<MatrixTraitImpl>(m); }
BinaryTraitPtr hom_threshold_trait(std::vector<long long> phi, bool flat) {
  return std::make_shared<HomThresholdTrait>(std::move(phi), flat);
}
BinaryTraitPtr rough_order_trait(std::vector<std::vector<int>> blocks, std::vector<int> eps,
                                 std::map<int, int> omega) {
  return std::make_shared<RoughOrderTrait>(std::move(blocks), std::move(eps), std::move(omega));
}
BinaryTraitPtr fixed_labels_trait(std::map<int, int> labels) {
  return std::make_shared<FixedLabelsTrait>(std::move(labels));
}

BinaryTraitPtr parse_trait(const std::string& descriptor) {
  if (descriptor == "gaussian-parity") return gaussian_parity_trait();
  if (descriptor == "sign01") return sign_trait01();
  if (descriptor == "affine-threshold") return affine_threshold_trait();
  if (descriptor.rfind("constant:", 0) == 0)
    return constant_trait(std::stoi(descriptor.substr(9)));
  if (descriptor.rfind("not(", 0) == 0 && descriptor.back() == ')')
    return not_trait(parse_trait(descriptor.substr(4, descriptor.size() - 5)));
  if (descriptor.rfind("hom:", 0) == 0 || descriptor.rfind("flat-hom:", 0) == 0) {
    bool flat = descriptor[0] == 'f';
    std::string rest = descriptor.substr(flat ? 9 : 4);
    std::vector<long long> phi;
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) phi.push_back(std::stoll(tok));
    return hom_threshold_trait(std::move(phi), flat);
  }
  throw ParseError("unknown trait descriptor: " + descriptor);
}

std::map<int, std::vector<long long>> eval_trait(const GaussCode& code, const std::string& name) {
  std::map<int, std::vector<long long>> out;
  if (name == "sign") {
    for (auto& [id, info] : code.crossings) out[id] = {info.sign};
  } else if (name == "component-index") {
    for (auto& [id, p] : component_index(code)) out[id] = {p.first, p.second};
  } else if (name == "order-index") {
    for (auto& [id, v] : order_index(code)) out[id] = {v};
  } else if (name == "gaussian-parity") {
    for (auto& [id, v] : gaussian_parity(code)) out[id] = {v};
  } else if (name == "affine-index") {
    for (auto& [id, v] : affine_index(code)) out[id] = {v};
  } else {
    throw ClassError("trait " + name + " needs a surface diagram");
  }
  return out;
}

std::map<int, std::vector<long long>> eval_trait(const SurfaceDiagram& d, const std::string& name) {
  std::map<int, std::vector<long long>> out;
  if (name == "homotopy-index") {
    for (auto& [v, h] : homotopy_index(d)) out[v] = std::vector<long long>(h.begin(), h.end());
  } else if (name == "flat-homotopy-index") {
    for (auto& [v, h] : flat_homotopy_index(d)) out[v] = std::vector<long long>(h.begin(), h.end());
  } else if (name == "based-index") {
    for (auto& [v, x] : based_index(d)) out[v] = {x};
  } else if (name == "unoriented-based-index") {
    for (auto& [v, x] : unoriented_based_index(d)) out[v] = {x};
  } else {
    return eval_trait(d.to_gauss(), name);
  }
  return out;
}

} // namespace skein
