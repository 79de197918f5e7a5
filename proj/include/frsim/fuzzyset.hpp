#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frsim {

// Ordered set of distinct words. Tokens are kept sorted so that membership
// vectors built over the same words always line up index by index.
class Universe {
 public:
  Universe() = default;
  // Sorts and deduplicates.
  explicit Universe(std::vector<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }
  std::optional<std::size_t> index_of(std::string_view token) const;

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> tokens_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> tokens);

// Membership vector over a universe; every degree lies in [0,1].
class FuzzySet {
 public:
  // Throws MembershipOutOfRange or LengthMismatch.
  FuzzySet(UniversePtr universe, std::vector<double> memberships);

  static FuzzySet zeros(UniversePtr universe);

  const Universe& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  std::span<const double> memberships() const noexcept { return memberships_; }
  std::size_t size() const noexcept { return memberships_.size(); }
  double operator[](std::size_t i) const { return memberships_[i]; }

  // Same universe contents and bitwise-equal degrees.
  bool operator==(const FuzzySet& other) const;

 private:
  UniversePtr universe_;
  std::vector<double> memberships_;
};

FuzzySet make_fuzzy_set(UniversePtr universe, std::vector<double> memberships);

// Throws UniverseMismatch unless both operands live on equal universes.
void require_same_universe(const Universe& a, const Universe& b);

// Pointwise min (Goedel t-norm).
FuzzySet intersect(const FuzzySet& a, const FuzzySet& b);
// Pointwise max.
FuzzySet union_of(const FuzzySet& a, const FuzzySet& b);

// Fuzzy cardinality: sum of memberships.
double sigma_count(const FuzzySet& a);

// |A ∩ B| / |A ∪ B| with sigma-count cardinality. Two all-zero sets are
// defined to be identical (1.0).
double jaccard_similarity(const FuzzySet& a, const FuzzySet& b);

// dot(A,B) / (|A| |B|). Returns 1.0 when both are all-zero and 0.0 when only
// one of them is.
double cosine_similarity(const FuzzySet& a, const FuzzySet& b);

}  // namespace frsim
