#pragma once

#include "skein/carter.hpp"
#include "skein/traits.hpp"

namespace skein {

// Skew matrix of homological intersections of crossing halves on the Carter
// surface; row and column 0 belong to the whole diagram class.
struct BasedMatrix {
  std::vector<int> crossings; // column order for rows/cols 1..n
  std::vector<std::vector<long long>> full;
  std::vector<int> reduced_crossings;
  std::vector<std::vector<long long>> reduced;
  int genus = 0;
};

BasedMatrix based_matrix(const GaussCode& flat_code);

// Equality of skew matrices with a distinguished first row, up to a
// simultaneous permutation of the other rows and a global sign.
bool based_matrix_equivalent(const std::vector<std::vector<long long>>& a,
                             const std::vector<std::vector<long long>>& b);

// Trait tau(c) = [ psi . D_c < 0 ] where psi is a combination of the reduced
// tribe classes and the full class: psi = sum_i alpha_i D_{t_i} - beta D.
// Tribes are matched against `reference` (the reduced matrix of the seed
// diagram, * row first) so the trait extends over the whole diagram family.
class TribeThresholdTrait : public BinaryTrait {
public:
  TribeThresholdTrait(std::vector<std::vector<long long>> reference,
                      std::vector<long long> alpha, long long beta);
  std::string descriptor() const override;
  std::map<int, int> labels(const GaussCode& code) const override;
  // phi values themselves (for diagnostics and the flat-order precondition).
  std::map<int, long long> phi(const GaussCode& code) const;
  long long phi_of_class(const GaussCode& code) const; // psi . D

private:
  std::vector<std::vector<long long>> reference_;
  std::vector<long long> alpha_;
  long long beta_;
};

} // namespace skein
