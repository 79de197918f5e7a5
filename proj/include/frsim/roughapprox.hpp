#pragma once

#include <cstddef>
#include <vector>

#include "frsim/fuzzyset.hpp"

namespace frsim {

// Reflexive, symmetric [0,1]-valued relation over a universe, stored dense
// row-major. Transitivity is not required.
class FuzzyRelation {
 public:
  // Throws LengthMismatch for a non-square buffer and InvalidRelation naming
  // the first offending (i, j) entry.
  FuzzyRelation(UniversePtr universe, std::vector<double> values);

  static FuzzyRelation identity(UniversePtr universe);

  const Universe& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_->size(); }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }

 private:
  UniversePtr universe_;
  std::vector<double> values_;
};

// lower(x) = min over y of max(1 - R(x,y), mu(y))
FuzzySet lower_approximation(const FuzzyRelation& rel, const FuzzySet& mu);

// upper(x) = max over y of min(R(x,y), mu(y))
FuzzySet upper_approximation(const FuzzyRelation& rel, const FuzzySet& mu);

}  // namespace frsim
