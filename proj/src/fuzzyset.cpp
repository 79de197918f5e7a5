#include "frsim/fuzzyset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frsim/error.hpp"

namespace frsim {

Universe::Universe(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  std::sort(tokens_.begin(), tokens_.end());
  tokens_.erase(std::unique(tokens_.begin(), tokens_.end()), tokens_.end());
}

std::optional<std::size_t> Universe::index_of(std::string_view token) const {
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token);
  if (it == tokens_.end() || *it != token) return std::nullopt;
  return static_cast<std::size_t>(it - tokens_.begin());
}

UniversePtr make_universe(std::vector<std::string> tokens) {
  return std::make_shared<const Universe>(std::move(tokens));
}

FuzzySet::FuzzySet(UniversePtr universe, std::vector<double> memberships)
    : universe_(std::move(universe)), memberships_(std::move(memberships)) {
  if (!universe_) universe_ = std::make_shared<const Universe>();
  if (memberships_.size() != universe_->size()) {
    throw Error(ErrorKind::LengthMismatch,
                "membership vector has " + std::to_string(memberships_.size()) +
                    " entries, universe has " + std::to_string(universe_->size()));
  }
  for (std::size_t i = 0; i < memberships_.size(); ++i) {
    const double m = memberships_[i];
    if (!(m >= 0.0 && m <= 1.0)) {
      throw Error(ErrorKind::MembershipOutOfRange,
                  "membership " + std::to_string(m) + " at index " + std::to_string(i) +
                      " is outside [0,1]");
    }
  }
}

FuzzySet FuzzySet::zeros(UniversePtr universe) {
  const std::size_t n = universe ? universe->size() : 0;
  return FuzzySet(std::move(universe), std::vector<double>(n, 0.0));
}

bool FuzzySet::operator==(const FuzzySet& other) const {
  return (universe_ == other.universe_ || *universe_ == *other.universe_) &&
         memberships_ == other.memberships_;
}

FuzzySet make_fuzzy_set(UniversePtr universe, std::vector<double> memberships) {
  return FuzzySet(std::move(universe), std::move(memberships));
}

void require_same_universe(const Universe& a, const Universe& b) {
  if (&a != &b && !(a == b)) {
    throw Error(ErrorKind::UniverseMismatch, "operands are defined over different universes");
  }
}

namespace {

template <typename Op>
FuzzySet pointwise(const FuzzySet& a, const FuzzySet& b, Op op) {
  require_same_universe(a.universe(), b.universe());
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return FuzzySet(a.universe_ptr(), std::move(out));
}

}  // namespace

FuzzySet intersect(const FuzzySet& a, const FuzzySet& b) {
  return pointwise(a, b, [](double x, double y) { return std::min(x, y); });
}

FuzzySet union_of(const FuzzySet& a, const FuzzySet& b) {
  return pointwise(a, b, [](double x, double y) { return std::max(x, y); });
}

double sigma_count(const FuzzySet& a) {
  double sum = 0.0;
  for (double m : a.memberships()) sum += m;
  return sum;
}

double jaccard_similarity(const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(a.universe(), b.universe());
  double inter = 0.0;
  double uni = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    inter += std::min(a[i], b[i]);
    uni += std::max(a[i], b[i]);
  }
  if (uni == 0.0) return 1.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

double cosine_similarity(const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(a.universe(), b.universe());
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 && nb == 0.0) return 1.0;
  if (na == 0.0 || nb == 0.0) return 0.0;
  // sqrt(fl(x*x)) == x, so identical operands give exactly 1.
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

}  // namespace frsim
