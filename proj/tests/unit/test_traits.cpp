#include "doctest.h"

#include "skein/corpus.hpp"
#include "skein/traits.hpp"
#include "skein/walk.hpp"

using namespace skein;

TEST_CASE("gaussian parity of the virtual trefoil") {
  GaussCode c = GaussCode::parse(codes::virtual_trefoil);
  auto par = gaussian_parity(c);
  CHECK(par.at(1) == 1);
  CHECK(par.at(2) == 1);
  CHECK(odd_writhe(c) == 2);
}

TEST_CASE("sign trait on the standard trefoil") {
  GaussCode c = GaussCode::parse(codes::trefoil);
  for (auto& [id, lbl] : eval_trait(c, "sign")) CHECK(lbl == std::vector<long long>{1});
  for (auto& [id, p] : gaussian_parity(c)) CHECK(p == 0);
}

TEST_CASE("affine index of the virtual trefoil") {
  GaussCode c = GaussCode::parse(codes::virtual_trefoil);
  auto ind = affine_index(c);
  std::set<long long> vals = {ind.at(1), ind.at(2)};
  CHECK(vals == std::set<long long>{1, -1});
  Laurent p = affine_index_polynomial(c);
  Laurent expect = Laurent::monomial(1, 1) + Laurent::monomial(1, -1) + Laurent(-2);
  CHECK(p == expect);
}

TEST_CASE("affine index is invariant along virtual walks") {
  GaussCode c = GaussCode::parse(codes::virtual_trefoil);
  auto theory = KnotTheory::preset("virt+");
  Laurent base = affine_index_polynomial(c);
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    auto w = random_walk(c, theory, 14, seed);
    CHECK(affine_index_polynomial(w.code) == base);
    CHECK(odd_writhe(w.code) == 2);
  }
}

TEST_CASE("trait axiom: gaussian parity transported along correspondences") {
  GaussCode c = GaussCode::parse(codes::virtual_trefoil);
  auto theory = KnotTheory::preset("virt+");
  auto trait = gaussian_parity_trait();
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    auto w = random_walk(c, theory, 10, seed);
    GaussCode prev = c;
    for (auto& step : w.trace) {
      auto before = trait->labels(prev);
      auto res = apply_move(prev, step.site);
      auto after = trait->labels(res.code);
      for (auto& [id, lbl] : before) {
        auto img = step.corr.map(id);
        if (img) CHECK(after.at(*img) == lbl);
      }
      prev = res.code;
    }
  }
}

TEST_CASE("order index on long knots") {
  GaussCode c = GaussCode::parse("[O1+U1+U2-O2-]");
  auto ord = order_index(c);
  CHECK(ord.at(1) == 1);
  CHECK(ord.at(2) == -1);
}

TEST_CASE("component index on the hopf link") {
  GaussCode c = GaussCode::parse(codes::hopf);
  auto comps = component_index(c);
  CHECK(comps.at(1) == std::pair<int, int>{1, 2});
  CHECK(comps.at(2) == std::pair<int, int>{2, 1});
}

TEST_CASE("based index and P-link on the trefoil") {
  GaussCode c = GaussCode::parse(codes::trefoil);
  SurfaceDiagram d = plane_diagram(c);
  auto idx = based_index(d);
  long long sum = 0;
  for (auto& [v, val] : idx) sum += d.vertex_sign(v);
  CHECK(sum == 3);
}

TEST_CASE("matrix trait values") {
  TraitMatrices m;
  m.c_plus = {{0, 1}, {1, 0}};
  m.c_minus = m.c_plus;
  m.u_plus = {0, 0};
  m.u_minus = {0, 0};
  auto t = matrix_trait(m);
  GaussCode link = GaussCode::parse(codes::hopf);
  auto lbl = t->labels(link);
  CHECK(lbl.at(1) == 1);
  CHECK(lbl.at(2) == 1);
}

TEST_CASE("rough order on a two component link") {
  auto t = rough_order_trait({{1}, {2}}, {0, 0}, {});
  GaussCode link = GaussCode::parse(codes::hopf);
  auto lbl = t->labels(link);
  CHECK(lbl.at(1) == 1);
  CHECK(lbl.at(2) == 0);
}

TEST_CASE("trait descriptors round trip") {
  for (auto& desc : {"gaussian-parity", "sign01", "affine-threshold", "constant:1",
                     "hom:0,1", "flat-hom:-1,0"}) {
    auto t = parse_trait(desc);
    CHECK(t->descriptor() == desc);
  }
}
