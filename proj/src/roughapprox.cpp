#include "frsim/roughapprox.hpp"

#include <algorithm>
#include <string>

#include "frsim/error.hpp"

namespace frsim {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

FuzzyRelation::FuzzyRelation(UniversePtr universe, std::vector<double> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (!universe_) universe_ = std::make_shared<const Universe>();
  const std::size_t n = universe_->size();
  if (values_.size() != n * n) {
    throw Error(ErrorKind::LengthMismatch, "relation needs " + std::to_string(n * n) +
                                               " entries, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = values_[i * n + j];
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorKind::InvalidRelation, "entry " + entry_name(i, j) + " = " +
                                                    std::to_string(v) + " is outside [0,1]");
      }
      if (i == j && v != 1.0) {
        throw Error(ErrorKind::InvalidRelation,
                    "relation is not reflexive at " + entry_name(i, j));
      }
      if (j > i && v != values_[j * n + i]) {
        throw Error(ErrorKind::InvalidRelation,
                    "relation is not symmetric at " + entry_name(i, j));
      }
    }
  }
}

FuzzyRelation FuzzyRelation::identity(UniversePtr universe) {
  const std::size_t n = universe ? universe->size() : 0;
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) values[i * n + i] = 1.0;
  return FuzzyRelation(std::move(universe), std::move(values));
}

FuzzySet lower_approximation(const FuzzyRelation& rel, const FuzzySet& mu) {
  require_same_universe(rel.universe(), mu.universe());
  const std::size_t n = rel.size();
  std::vector<double> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    double acc = 1.0;
    for (std::size_t y = 0; y < n; ++y) acc = std::min(acc, std::max(1.0 - rel(x, y), mu[y]));
    out[x] = acc;
  }
  return FuzzySet(mu.universe_ptr(), std::move(out));
}

FuzzySet upper_approximation(const FuzzyRelation& rel, const FuzzySet& mu) {
  require_same_universe(rel.universe(), mu.universe());
  const std::size_t n = rel.size();
  std::vector<double> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    double acc = 0.0;
    for (std::size_t y = 0; y < n; ++y) acc = std::max(acc, std::min(rel(x, y), mu[y]));
    out[x] = acc;
  }
  return FuzzySet(mu.universe_ptr(), std::move(out));
}

}  // namespace frsim
