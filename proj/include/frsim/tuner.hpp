#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "frsim/dataset.hpp"
#include "frsim/fis.hpp"

namespace frsim {

struct TermRef {
  std::string variable;
  std::string term;

  bool operator==(const TermRef&) const = default;
};

// Terms on one axis move together: every combination picks one candidate
// index per axis and applies that triple to all of the axis' terms.
struct GridAxis {
  std::vector<TermRef> terms;
  std::vector<TriangularMF> candidates;
};

struct GridSpec {
  FisConfig base;
  std::vector<GridAxis> axes;
};

// Average-term apex in {0.6, 0.65, 0.7} and right foot in {0.85, 0.9, 0.95}
// (left foot 0.4); high/good left foot in {0.8, 0.85, 0.9}. Both inputs are
// tied. Built on model1, so model1 and model2 are both grid points.
GridSpec default_grid_spec();

// {
//   "base": "model1",                                  (optional preset)
//   "terms": { "similarity_lower.average": [[0.4, 0.6, 0.85], ...], ... },
//   "tie": [["similarity_lower.average", "similarity_upper.average"]]  (optional)
// }
// Tied terms must list the same triples. Throws InvalidConfig or
// UnknownVariableOrTerm.
GridSpec parse_grid_spec(const nlohmann::json& json);
GridSpec load_grid_spec(const std::filesystem::path& path);

struct Candidate {
  std::size_t id = 0;  // position in enumeration order
  std::string label;
  FisConfig config;
};

// Cartesian product of the axes, last axis varying fastest. Combinations with
// an invalid triple or with an input value that no term covers are dropped.
// Throws EmptyGrid when nothing survives.
std::vector<Candidate> grid_candidates(const GridSpec& spec);

struct ScoredPair {
  int pair_id = 0;
  double gold = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct LeaderboardEntry {
  std::size_t id = 0;
  std::string label;
  double mse = 0.0;          // +inf when every pair failed
  std::size_t n = 0;         // pairs that produced a rank
  std::size_t failures = 0;  // pairs with ZeroAggregate
};

struct TuneResult {
  Candidate best;
  std::vector<LeaderboardEntry> leaderboard;  // ascending mse, then id
  std::vector<PairFailure> skipped;           // pairs whose similarities failed
  std::size_t n_pairs = 0;                    // pairs with similarities
};

// Similarities do not depend on the FIS, so they are computed once.
std::vector<ScoredPair> score_pairs(const WordnetDb& db, std::span<const SickRecord> records,
                                    SimilarityKind kind, unsigned jobs,
                                    std::vector<PairFailure>& failures,
                                    const Stopwords& stopwords = Stopwords::builtin());

// Argmin of training MSE; ties go to the earliest candidate. Throws EmptyGrid
// or EmptyInput.
TuneResult tune_scored(std::span<const ScoredPair> pairs, std::span<const Candidate> candidates,
                       unsigned jobs = 1);

TuneResult tune(const WordnetDb& db, std::span<const SickRecord> train,
                std::span<const Candidate> candidates, SimilarityKind kind = SimilarityKind::Cosine,
                unsigned jobs = 1, const Stopwords& stopwords = Stopwords::builtin());

}  // namespace frsim
