#include "skein/invariants.hpp"

namespace skein {

namespace {

int circles_of_state(const GaussCode& code, unsigned state, const std::vector<int>& ids) {
  GaussCode work = code;
  for (size_t i = 0; i < ids.size(); ++i) {
    bool a_smoothing = (state >> i & 1u) == 0;
    int sign = work.sign(ids[i]);
    bool oriented = a_smoothing == (sign > 0); // A = oriented exactly at positive crossings
    if (oriented) work.smooth_oriented(ids[i]);
    else work.smooth_unoriented(ids[i]);
  }
  return work.component_count();
}

} // namespace

Bracket kauffman_bracket(const GaussCode& code) {
  std::vector<int> ids;
  for (auto& [id, info] : code.crossings) {
    if (info.flavor != Flavor::Classical)
      throw ClassError("Kauffman bracket needs classical crossings only");
    ids.push_back(id);
  }
  int n = (int)ids.size();
  if (n > 24) throw ClassError("state sum too large");
  Laurent delta = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
  Laurent total;
  for (unsigned state = 0; state < (1u << n); ++state) {
    int a_count = 0;
    for (int i = 0; i < n; ++i)
      if ((state >> i & 1u) == 0) ++a_count;
    int circles = circles_of_state(code, state, ids);
    Laurent term = Laurent::monomial(1, a_count - (n - a_count));
    for (int k = 0; k < circles; ++k) term *= delta;
    total += term;
  }
  Bracket b;
  b.value = total;
  long long wr = writhe(code);
  // X = (-a^3)^{-wr} <D>
  Laurent norm = Laurent::monomial((wr % 2 == 0) ? 1 : -1, -3 * wr);
  b.x = total * norm;
  // Jones variable: a = t^{-1/4}; exponents of a map to s-exponents with
  // s = t^{1/2}, e_a -> -e_a/2.
  Laurent jones;
  for (auto& [e, c] : b.x.coeffs()) {
    if (e % 2 != 0) throw ValidationError("odd exponent in X polynomial");
    jones += Laurent::monomial(c, -e / 2);
  }
  b.jones = jones;
  return b;
}

Laurent kauffman_bracket_two_var_at(const GaussCode& code, const Laurent& a_value,
                                    const Laurent& b_value) {
  std::vector<int> ids;
  for (auto& [id, info] : code.crossings) ids.push_back(id);
  int n = (int)ids.size();
  // delta = -(a/b + b/a) evaluated formally requires b invertible; callers
  // pass monomials.
  if (a_value.coeffs().size() != 1 || b_value.coeffs().size() != 1)
    throw ClassError("two-variable bracket expects monomial substitutions");
  auto a_exp = a_value.coeffs().begin()->first;
  auto a_c = a_value.coeffs().begin()->second;
  auto b_exp = b_value.coeffs().begin()->first;
  auto b_c = b_value.coeffs().begin()->second;
  if (std::abs(a_c) != 1 || std::abs(b_c) != 1)
    throw ClassError("two-variable bracket expects unit coefficients");
  auto a_inv = Laurent::monomial(a_c, -a_exp);
  auto b_inv = Laurent::monomial(b_c, -b_exp);
  Laurent delta = -(a_value * b_inv + b_value * a_inv);
  Laurent total;
  for (unsigned state = 0; state < (1u << n); ++state) {
    Laurent term(1);
    for (int i = 0; i < n; ++i) {
      bool first = (state >> i & 1u) == 0; // type-0 smoothing
      int sign = code.sign(ids[i]);
      // positive: type0 carries a, type1 carries b; negative: b^{-1}, a^{-1}.
      if (sign > 0) term *= first ? a_value : b_value;
      else term *= first ? b_inv : a_inv;
    }
    int circles = circles_of_state(code, state, ids);
    for (int k = 0; k < circles; ++k) term *= delta;
    total += term;
  }
  return total;
}

} // namespace skein
