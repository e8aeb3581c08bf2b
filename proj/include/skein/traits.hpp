#pragma once

#include <functional>
#include <memory>

#include "skein/carter.hpp"
#include "skein/gauss.hpp"
#include "skein/laurent.hpp"
#include "skein/map.hpp"

namespace skein {

// --- elementary crossing data on Gauss codes ---------------------------------

// (over component, under component), 1-based.
std::map<int, std::pair<int, int>> component_index(const GaussCode& code);

// +1 early overcrossing, -1 early undercrossing, 0 for non-self or closed.
std::map<int, int> order_index(const GaussCode& code);

// Count of passages strictly between the two passages, mod 2 (knots).
std::map<int, int> gaussian_parity(const GaussCode& code);

// Kauffman's affine index Ind(c) (knots): signed interleavement sum.
std::map<int, long long> affine_index(const GaussCode& code);
Laurent affine_index_polynomial(const GaussCode& code); // sum sgn(c)(t^{Ind(c)}-1)
long long odd_writhe(const GaussCode& code);
long long writhe(const GaussCode& code);

// --- surface-diagram crossing data -------------------------------------------

// Homotopy index of self-crossings: class of the under-to-over half.
std::map<int, HomClass> homotopy_index(const SurfaceDiagram& d);
// Flat variant: class of the left half.
std::map<int, HomClass> flat_homotopy_index(const SurfaceDiagram& d);
// Based index at the marked face, representative of Z_mu.
std::map<int, long long> based_index(const SurfaceDiagram& d);
// Unoriented based index in Z_2.
std::map<int, int> unoriented_based_index(const SurfaceDiagram& d);

// --- binary traits -------------------------------------------------------------

class BinaryTrait {
public:
  virtual ~BinaryTrait() = default;
  virtual std::string descriptor() const = 0;
  virtual bool needs_surface() const { return false; }
  virtual std::map<int, int> labels(const GaussCode& code) const;
  // Keys are vertex indices for surface diagrams.
  virtual std::map<int, int> labels_map(const SurfaceDiagram& d) const;
};

using BinaryTraitPtr = std::shared_ptr<const BinaryTrait>;

BinaryTraitPtr constant_trait(int value);
BinaryTraitPtr gaussian_parity_trait();
BinaryTraitPtr sign_trait01();                       // 0 for positive crossings
BinaryTraitPtr affine_threshold_trait();             // 0 iff Ind(c) >= 0
BinaryTraitPtr not_trait(BinaryTraitPtr base);
BinaryTraitPtr sum_trait(BinaryTraitPtr a, BinaryTraitPtr b);
// Appendix-style matrix trait on tangles: values from C+/-, U+/-.
struct TraitMatrices {
  std::vector<std::vector<int>> c_plus, c_minus; // k x k over Z2
  std::vector<int> u_plus, u_minus;              // length k over Z2
};
BinaryTraitPtr matrix_trait(const TraitMatrices& m);
// Homological threshold: 0 iff phi(h(c)) >= 0, with h the under-to-over half
// (flat diagrams use the left half). Needs a surface diagram.
BinaryTraitPtr hom_threshold_trait(std::vector<long long> phi, bool flat);
// Rough order tau^{C,eps,omega}.
BinaryTraitPtr rough_order_trait(std::vector<std::vector<int>> blocks, std::vector<int> eps,
                                 std::map<int, int> omega);
// Fixed labels transported along a correspondence.
BinaryTraitPtr fixed_labels_trait(std::map<int, int> labels);

BinaryTraitPtr parse_trait(const std::string& descriptor);

// --- general trait evaluation (spec operation) --------------------------------

// Evaluates a named trait on a diagram; labels rendered as integer tuples.
std::map<int, std::vector<long long>> eval_trait(const GaussCode& code, const std::string& name);
std::map<int, std::vector<long long>> eval_trait(const SurfaceDiagram& d, const std::string& name);

} // namespace skein
