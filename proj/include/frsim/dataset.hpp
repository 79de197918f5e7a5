#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frsim/error.hpp"
#include "frsim/fis.hpp"
#include "frsim/pipeline.hpp"
#include "frsim/wordnet.hpp"

namespace frsim {

struct SickRecord {
  int pair_id = 0;
  std::string sentence_a;
  std::string sentence_b;
  double relatedness = 0.0;  // gold score in [1, 5]
  std::string entailment;    // kept, not predicted

  bool operator==(const SickRecord&) const = default;
};

// Columns are located by header name: pair_ID, sentence_A, sentence_B,
// relatedness_score and entailment_judgment (or entailment_label). Other
// columns are ignored. Throws FileNotFound, MissingColumn or RowError.
std::vector<SickRecord> load_sick(const std::filesystem::path& path);
std::vector<SickRecord> read_sick(std::istream& in, const std::string& source = "<stream>");

// Five-column trial layout.
void write_sick(std::ostream& out, std::span<const SickRecord> records);

// Mean squared error. Throws LengthMismatch or EmptyInput.
double mse(std::span<const double> predictions, std::span<const double> golds);

// Pearson correlation of average ranks. Throws LengthMismatch, EmptyInput
// (fewer than two values) or DegenerateInput (a constant side).
double spearman(std::span<const double> predictions, std::span<const double> golds);

struct Split {
  std::vector<SickRecord> train;
  std::vector<SickRecord> test;
};

// Draws n_train + n_test distinct records without replacement. Uses
// std::mt19937_64 (fully specified by the standard) with a rejection-sampled
// partial Fisher-Yates shuffle, so a seed gives the same split everywhere.
// Throws InsufficientRecords.
Split split_random(std::span<const SickRecord> records, std::size_t n_train, std::size_t n_test,
                   std::uint64_t seed);

struct PairPrediction {
  int pair_id = 0;
  double predicted = 0.0;
  double gold = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct PairFailure {
  int pair_id = 0;
  ErrorKind kind = ErrorKind::EmptySentence;
};

struct EvalReport {
  std::size_t n = 0;
  std::optional<double> mse;       // absent when n == 0
  std::optional<double> spearman;  // absent when n < 2 or a side is constant
  std::vector<PairPrediction> per_pair;  // sorted by pair_id
  std::vector<PairFailure> failures;     // sorted by pair_id
};

// Scores every record; pairs that fail (EmptySentence, ZeroAggregate) are
// listed under failures and left out of the metrics. Output does not depend
// on record order or on `jobs`. Throws EmptyInput.
EvalReport evaluate(const WordnetDb& db, const FisConfig& config, SimilarityKind kind,
                    std::span<const SickRecord> records, unsigned jobs = 1,
                    const Stopwords& stopwords = Stopwords::builtin());

// Metrics over precomputed predictions; shared by evaluate() and the tuner.
EvalReport summarize(std::vector<PairPrediction> predictions, std::vector<PairFailure> failures);

}  // namespace frsim
