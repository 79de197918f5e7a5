#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "frsim/fis.hpp"
#include "frsim/fuzzyset.hpp"
#include "frsim/roughapprox.hpp"
#include "frsim/wordnet.hpp"

namespace frsim {

enum class SimilarityKind { Cosine, Jaccard };

std::string_view to_string(SimilarityKind kind);
// "cosine" or "jaccard"; throws InvalidConfig otherwise.
SimilarityKind parse_similarity_kind(std::string_view name);

double set_similarity(SimilarityKind kind, const FuzzySet& a, const FuzzySet& b);

class Stopwords {
 public:
  // Articles, conjunctions, prepositions, pronouns, be/have/do forms and
  // modals.
  static const Stopwords& builtin();
  // One lowercase token per line; '#' starts a comment. Throws FileNotFound.
  static Stopwords load(const std::filesystem::path& path);

  explicit Stopwords(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  bool contains(std::string_view token) const { return words_.count(std::string(token)) > 0; }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Lowercases, drops apostrophes, treats every other non-alphanumeric byte as
// a separator and removes stopwords. Order and duplicates are kept. Throws
// EmptySentence when nothing survives.
std::vector<std::string> tokenize(std::string_view text,
                                  const Stopwords& stopwords = Stopwords::builtin());

// Sorted, deduplicated union of both token lists.
UniversePtr build_universe(std::span<const std::string> tokens1,
                           std::span<const std::string> tokens2);

// R(x, y) = word similarity, diagonal exactly 1.
FuzzyRelation relation_matrix(const WordnetDb& db, const UniversePtr& universe);

// mu(w) = 1 for words of the sentence, else the best similarity of w to any
// sentence word.
FuzzySet membership_vector(const WordnetDb& db, std::span<const std::string> tokens,
                           const UniversePtr& universe);
// Same values, read from an already computed relation.
FuzzySet membership_vector(const FuzzyRelation& relation, std::span<const std::string> tokens);

struct SimilarityPair {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t universe_size = 0;
};

// Lower and upper similarities of the two sentences' fuzzy-rough
// approximations.
SimilarityPair sentence_similarities(const WordnetDb& db, std::string_view s1,
                                     std::string_view s2, SimilarityKind kind,
                                     const Stopwords& stopwords = Stopwords::builtin());

struct RankResult {
  double lower_similarity = 0.0;
  double upper_similarity = 0.0;
  double rank = 0.0;
  std::size_t universe_size = 0;
  SimilarityKind similarity_kind = SimilarityKind::Cosine;
};

RankResult sentence_rank(const WordnetDb& db, const FisConfig& config, std::string_view s1,
                         std::string_view s2, SimilarityKind kind = SimilarityKind::Cosine,
                         const Stopwords& stopwords = Stopwords::builtin());

}  // namespace frsim
