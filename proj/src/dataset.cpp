#include "frsim/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include "frsim/parallel.hpp"

namespace frsim {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) return out;
    start = tab + 1;
  }
}

std::size_t require_column(const std::vector<std::string>& header,
                           std::initializer_list<std::string_view> names, const std::string& source) {
  for (std::string_view name : names) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it != header.end()) return static_cast<std::size_t>(it - header.begin());
  }
  throw Error(ErrorKind::MissingColumn,
              source + ": missing column '" + std::string(*names.begin()) + "'");
}

template <typename T>
bool parse_number(const std::string& s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

void check_lengths(std::span<const double> a, std::span<const double> b, std::size_t minimum) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "predictions and golds differ in length");
  }
  if (a.size() < minimum) {
    throw Error(ErrorKind::EmptyInput,
                "need at least " + std::to_string(minimum) + " values, got " + std::to_string(a.size()));
  }
}

}  // namespace

std::vector<SickRecord> read_sick(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::MissingColumn, source + ": missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_tabs(line);
  const std::size_t c_id = require_column(header, {"pair_ID"}, source);
  const std::size_t c_a = require_column(header, {"sentence_A"}, source);
  const std::size_t c_b = require_column(header, {"sentence_B"}, source);
  const std::size_t c_rel = require_column(header, {"relatedness_score"}, source);
  const std::size_t c_ent =
      require_column(header, {"entailment_judgment", "entailment_label"}, source);
  const std::size_t needed = std::max({c_id, c_a, c_b, c_rel, c_ent}) + 1;

  std::vector<SickRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    auto fail = [&](const std::string& reason) {
      throw Error(ErrorKind::RowError, source + ":" + std::to_string(line_no) + ": " + reason);
    };
    if (fields.size() < needed) fail("expected at least " + std::to_string(needed) + " columns");
    SickRecord r;
    if (!parse_number(fields[c_id], r.pair_id)) fail("bad pair_ID '" + fields[c_id] + "'");
    if (!parse_number(fields[c_rel], r.relatedness)) {
      fail("bad relatedness_score '" + fields[c_rel] + "'");
    }
    if (!(r.relatedness >= 1.0 && r.relatedness <= 5.0)) fail("relatedness_score outside [1, 5]");
    r.sentence_a = fields[c_a];
    r.sentence_b = fields[c_b];
    if (r.sentence_a.empty() || r.sentence_b.empty()) fail("empty sentence");
    r.entailment = fields[c_ent];
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<SickRecord> load_sick(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open dataset " + path.string());
  return read_sick(in, path.string());
}

void write_sick(std::ostream& out, std::span<const SickRecord> records) {
  out << "pair_ID\tsentence_A\tsentence_B\trelatedness_score\tentailment_judgment\n";
  for (const SickRecord& r : records) {
    char score[32];
    auto [end, ec] = std::to_chars(score, score + sizeof score, r.relatedness);
    out << r.pair_id << '\t' << r.sentence_a << '\t' << r.sentence_b << '\t'
        << std::string_view(score, static_cast<std::size_t>(end - score)) << '\t' << r.entailment
        << '\n';
  }
}

double mse(std::span<const double> predictions, std::span<const double> golds) {
  check_lengths(predictions, golds, 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const double d = predictions[i] - golds[i];
    sum += d * d;
  }
  return sum / static_cast<double>(predictions.size());
}

double spearman(std::span<const double> predictions, std::span<const double> golds) {
  check_lengths(predictions, golds, 2);
  const auto rx = average_ranks(predictions);
  const auto ry = average_ranks(golds);
  const double n = static_cast<double>(rx.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::DegenerateInput, "rank correlation of a constant sequence");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

Split split_random(std::span<const SickRecord> records, std::size_t n_train, std::size_t n_test,
                   std::uint64_t seed) {
  const std::size_t n = records.size();
  const std::size_t k = n_train + n_test;
  if (k > n) {
    throw Error(ErrorKind::InsufficientRecords, "requested " + std::to_string(k) +
                                                    " records, dataset has " + std::to_string(n));
  }
  std::mt19937_64 gen(seed);
  auto bounded = [&gen](std::uint64_t range) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
    std::uint64_t x;
    do {
      x = gen();
    } while (x >= limit);
    return x % range;
  };
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(idx[i], idx[i + bounded(n - i)]);
  }
  Split split;
  for (std::size_t i = 0; i < n_train; ++i) split.train.push_back(records[idx[i]]);
  for (std::size_t i = n_train; i < k; ++i) split.test.push_back(records[idx[i]]);
  return split;
}

EvalReport summarize(std::vector<PairPrediction> predictions, std::vector<PairFailure> failures) {
  auto key = [](const PairPrediction& p) {
    return std::tie(p.pair_id, p.predicted, p.gold, p.lower, p.upper);
  };
  std::sort(predictions.begin(), predictions.end(),
            [&](const PairPrediction& a, const PairPrediction& b) { return key(a) < key(b); });
  std::sort(failures.begin(), failures.end(), [](const PairFailure& a, const PairFailure& b) {
    return std::tie(a.pair_id, a.kind) < std::tie(b.pair_id, b.kind);
  });

  EvalReport report;
  report.n = predictions.size();
  std::vector<double> pred;
  std::vector<double> gold;
  for (const PairPrediction& p : predictions) {
    pred.push_back(p.predicted);
    gold.push_back(p.gold);
  }
  if (!pred.empty()) report.mse = mse(pred, gold);
  if (pred.size() >= 2) {
    try {
      report.spearman = spearman(pred, gold);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateInput) throw;
    }
  }
  report.per_pair = std::move(predictions);
  report.failures = std::move(failures);
  return report;
}

EvalReport evaluate(const WordnetDb& db, const FisConfig& config, SimilarityKind kind,
                    std::span<const SickRecord> records, unsigned jobs, const Stopwords& stopwords) {
  if (records.empty()) throw Error(ErrorKind::EmptyInput, "no records to evaluate");
  struct Slot {
    std::optional<PairPrediction> prediction;
    std::optional<ErrorKind> failure;
    std::exception_ptr unexpected;
  };
  std::vector<Slot> slots(records.size());
  parallel_for(records.size(), jobs, [&](std::size_t i) {
    const SickRecord& r = records[i];
    try {
      const RankResult res = sentence_rank(db, config, r.sentence_a, r.sentence_b, kind, stopwords);
      slots[i].prediction =
          PairPrediction{r.pair_id, res.rank, r.relatedness, res.lower_similarity, res.upper_similarity};
    } catch (const Error& e) {
      slots[i].failure = e.kind();
    } catch (...) {
      slots[i].unexpected = std::current_exception();
    }
  });

  std::vector<PairPrediction> predictions;
  std::vector<PairFailure> failures;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].unexpected) std::rethrow_exception(slots[i].unexpected);
    if (slots[i].prediction) {
      predictions.push_back(*slots[i].prediction);
    } else {
      failures.push_back(PairFailure{records[i].pair_id, *slots[i].failure});
    }
  }
  return summarize(std::move(predictions), std::move(failures));
}

}  // namespace frsim
