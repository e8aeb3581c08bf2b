#pragma once

#include "skein/laurent.hpp"
#include "skein/map.hpp"
#include "skein/map_moves.hpp"
#include "skein/traits.hpp"

namespace skein {

// --- rotation number -----------------------------------------------------------

struct RotResult {
  long long rot_lift = 0; // in Z
  long long rot = 0;      // representative of Z_chi_bar
};
RotResult rot(const SurfaceDiagram& d);

// --- based index polynomial -------------------------------------------------------

struct IndexPoly {
  Laurent p;         // in Z[t,1/t]/(t^mu - 1)
  long long mu = 0;
};
IndexPoly index_polynomial(const SurfaceDiagram& d);

// --- unoriented profile ---------------------------------------------------------

struct UnorProfile {
  int rho0 = 0;        // of the A-smoothed diagram (defined for crossingless input too)
  int rho = 0;         // rho0(D_A) + n_odd
  long long wr_odd = 0;
  long long n_odd = 0;
  long long n_even = 0;
};
UnorProfile unoriented_profile(const SurfaceDiagram& d);

// Profile of the diagram obtained by smoothing the crossings in `smooth`
// (surviving crossings keep their unoriented based indices).
UnorProfile unoriented_profile_after(const SurfaceDiagram& d, const std::map<int, SmoothType>& smooth);
RotResult rot_after(const SurfaceDiagram& d, const std::map<int, SmoothType>& smooth);
// Classes and component count of the (virtually) smoothed diagram.
struct SmoothedShape {
  HomClass total;
  long long components = 0;
};
SmoothedShape smoothed_shape(const SurfaceDiagram& d, const std::map<int, SmoothType>& smooth);

// --- Kauffman bracket -------------------------------------------------------------

struct Bracket {
  Laurent value;     // <D> in the variable a (two-variable form at b = 1/a)
  Laurent x;         // X(D) = (-a^3)^{-wr} <D>
  Laurent jones;     // X in the Jones variable (same letter by the change of variable)
};
// State sum over all smoothings; classical crossings only.
Bracket kauffman_bracket(const GaussCode& code);
// Two-variable bracket: returns map exponent pair -> coefficient via Laurent in a with
// separate b-exponent tracking collapsed at b = 1/a in `kauffman_bracket`.
Laurent kauffman_bracket_two_var_at(const GaussCode& code, const Laurent& a_value,
                                    const Laurent& b_value); // for tests

// --- skein classifiers ----------------------------------------------------------------

struct SkeinClass {
  std::string theory;
  std::string payload; // canonical printable form; equality is string equality
  bool operator==(const SkeinClass& o) const = default;
};
SkeinClass skein_class(const SurfaceDiagram& d, const std::string& theory_tag);
std::vector<std::string> skein_theory_tags();

// --- Goldman bracket / Turaev cobracket ----------------------------------------------

// Goldman bracket of a two-component flat diagram: coefficients per merged class.
std::map<HomClass, long long> goldman_bracket(const SurfaceDiagram& d);
// Turaev cobracket of a flat knot diagram: coefficients per ordered class pair,
// with O_0 reduction dropping null classes.
std::map<std::pair<HomClass, HomClass>, long long> turaev_cobracket(const SurfaceDiagram& d);

// --- extended homotopy index polynomial (Delta equivalence) ----------------------------

struct LKData {
  std::vector<HomClass> kappa; // per component
  // group-ring sums keyed by component pair (i,j), entries class->coeff with
  // exponents reduced modulo the subgroup generated by kappa_i, kappa_j.
  std::map<std::pair<int, int>, std::map<HomClass, long long>> lk;
  // long components: (i, eps) keyed sums
  std::map<std::pair<int, int>, std::map<HomClass, long long>> lk_long;
  std::string str() const;
  bool operator==(const LKData&) const = default;
};
LKData lk_data(const SurfaceDiagram& d);
LKData lk_data(const GaussCode& code); // plane diagrams (rank0)

struct DeltaVerdict {
  bool equivalent;
  LKData a, b;
};
DeltaVerdict lk_delta(const SurfaceDiagram& a, const SurfaceDiagram& b);
DeltaVerdict lk_delta(const GaussCode& a, const GaussCode& b);

// --- fused linking matrix ----------------------------------------------------------------

std::vector<std::vector<long long>> fused_linking(const GaussCode& code, const BinaryTrait& trait);

} // namespace skein
