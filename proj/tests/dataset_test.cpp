#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "frsim/dataset.hpp"
#include "frsim/error.hpp"
#include "frsim/fisdsl.hpp"
#include "support/generators.hpp"

using namespace frsim;
using frsim::testing::Gen;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::ParseError;
}

std::vector<SickRecord> read(const std::string& text) {
  std::istringstream in(text);
  return read_sick(in);
}

std::vector<SickRecord> numbered(int n) {
  std::vector<SickRecord> out;
  for (int i = 1; i <= n; ++i) out.push_back({i, "dog " + std::to_string(i), "cat", 1.0 + (i % 5), "NEUTRAL"});
  return out;
}

const WordnetDb& mini() {
  static const WordnetDb db = WordnetDb::load(FRSIM_TEST_DATA "/mini_wordnet");
  return db;
}

}  // namespace

TEST(LoadSick, TrialLayout) {
  auto r = read(
      "pair_ID\tsentence_A\tsentence_B\trelatedness_score\tentailment_judgment\n"
      "1\tA dog runs\tA cat sleeps\t2.5\tNEUTRAL\n"
      "7\tA man walks\tA man walks\t5\tENTAILMENT\r\n");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], (SickRecord{1, "A dog runs", "A cat sleeps", 2.5, "NEUTRAL"}));
  EXPECT_EQ(r[1].entailment, "ENTAILMENT");
}

TEST(LoadSick, FullReleaseLayout) {
  auto r = read(
      "pair_ID\tsentence_A\tsentence_B\tentailment_label\trelatedness_score\tentailment_AB\t"
      "entailment_BA\tsentence_A_original\tsentence_B_original\tsentence_A_dataset\t"
      "sentence_B_dataset\tSemEval_set\n"
      "1\tA dog runs\tA cat sleeps\tNEUTRAL\t2.5\tA_neutral_B\tB_neutral_A\tx\ty\tFLICKR\tFLICKR\tTRAIN\n");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], (SickRecord{1, "A dog runs", "A cat sleeps", 2.5, "NEUTRAL"}));
}

TEST(LoadSick, Errors) {
  EXPECT_EQ(kind_of([] { read("pair_ID\tsentence_A\tsentence_B\tentailment_label\n1\ta\tb\tX\n"); }),
            ErrorKind::MissingColumn);
  const std::string header = "pair_ID\tsentence_A\tsentence_B\trelatedness_score\tentailment_judgment\n";
  EXPECT_EQ(kind_of([&] { read(header + "1\ta\tb\thigh\tX\n"); }), ErrorKind::RowError);
  EXPECT_EQ(kind_of([&] { read(header + "1\ta\tb\t5.5\tX\n"); }), ErrorKind::RowError);
  EXPECT_EQ(kind_of([&] { read(header + "x\ta\tb\t3\tX\n"); }), ErrorKind::RowError);
  EXPECT_EQ(kind_of([&] { read(header + "1\t\tb\t3\tX\n"); }), ErrorKind::RowError);
  EXPECT_EQ(kind_of([&] { read(header + "1\ta\n"); }), ErrorKind::RowError);
  try {
    read(header + "1\ta\tb\t3\tX\n2\ta\tb\tnan?\tX\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { load_sick("/nonexistent/sick.tsv"); }), ErrorKind::FileNotFound);
}

TEST(LoadSick, WriteBackRoundTrip) {
  const auto records = load_sick(FRSIM_TEST_DATA "/sick_synthetic.tsv");
  ASSERT_EQ(records.size(), 40u);
  std::ostringstream out;
  write_sick(out, records);
  EXPECT_EQ(read(out.str()), records);
}

TEST(Metrics, Mse) {
  EXPECT_EQ(mse(std::vector<double>{1, 2}, std::vector<double>{1, 2}), 0.0);
  EXPECT_EQ(mse(std::vector<double>{0, 0}, std::vector<double>{1, 1}), 1.0);
  EXPECT_EQ(mse(std::vector<double>{1, 2}, std::vector<double>{2, 4}), 2.5);
  EXPECT_EQ(kind_of([] { mse(std::vector<double>{1}, std::vector<double>{1, 2}); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { mse(std::vector<double>{}, std::vector<double>{}); }), ErrorKind::EmptyInput);
}

TEST(Metrics, Spearman) {
  EXPECT_DOUBLE_EQ(spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{2, 5, 7, 9}), 1.0);
  EXPECT_DOUBLE_EQ(spearman(std::vector<double>{1, 2, 3, 4}, std::vector<double>{9, 5, 2, 1}), -1.0);
  EXPECT_DOUBLE_EQ(spearman(std::vector<double>{1, 2, 3}, std::vector<double>{1, 3, 2}), 0.5);
  // Ties take the mean rank: ranks (1.5, 1.5, 3) vs (1, 2, 3).
  EXPECT_NEAR(spearman(std::vector<double>{1, 1, 2}, std::vector<double>{1, 2, 3}), std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_EQ(kind_of([] { spearman(std::vector<double>{1, 1}, std::vector<double>{1, 2}); }),
            ErrorKind::DegenerateInput);
  EXPECT_EQ(kind_of([] { spearman(std::vector<double>{1, 2}, std::vector<double>{1}); }),
            ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([] { spearman(std::vector<double>{1}, std::vector<double>{1}); }), ErrorKind::EmptyInput);
}

TEST(MetricsProperty, Invariances) {
  Gen g(61);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + g.index(30);
    std::vector<double> p(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = std::round(g.uniform(0, 5) * 4) / 4;
      q[i] = g.uniform(1, 5);
    }
    ASSERT_GE(mse(p, q), 0.0);
    ASSERT_EQ(mse(p, p), 0.0);
    if (std::all_of(p.begin(), p.end(), [&](double x) { return x == p[0]; })) continue;
    const double rho = spearman(p, q);
    ASSERT_GE(rho, -1.0 - 1e-12);
    ASSERT_LE(rho, 1.0 + 1e-12);
    std::vector<double> tp(n);
    for (std::size_t i = 0; i < n; ++i) tp[i] = std::exp(p[i]) * 3.0 - 7.0;
    ASSERT_NEAR(spearman(tp, q), rho, 1e-12);
    ASSERT_NEAR(spearman(q, p), rho, 1e-12);
  }
}

TEST(Split, DeterministicAndDisjoint) {
  const auto records = numbered(1000);
  const Split a = split_random(records, 500, 500, 42);
  const Split b = split_random(records, 500, 500, 42);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  std::set<int> train_ids;
  for (const auto& r : a.train) train_ids.insert(r.pair_id);
  EXPECT_EQ(train_ids.size(), 500u);
  for (const auto& r : a.test) EXPECT_FALSE(train_ids.count(r.pair_id));
  const Split c = split_random(records, 500, 500, 43);
  EXPECT_NE(a.train, c.train);
  EXPECT_EQ(kind_of([] { split_random(numbered(600), 500, 500, 1); }), ErrorKind::InsufficientRecords);
}

TEST(Summarize, MetricsOverSuccessesOnly) {
  const EvalReport one = summarize({{1, 3.0, 4.0, 0.5, 0.6}}, {});
  EXPECT_EQ(one.n, 1u);
  EXPECT_EQ(one.mse, 1.0);
  EXPECT_FALSE(one.spearman.has_value());
  const EvalReport r = summarize({{9, 2.0, 2.0, 0, 0}, {3, 4.0, 5.0, 0, 0}, {5, 3.0, 3.0, 0, 0}},
                                 {{7, ErrorKind::EmptySentence}, {2, ErrorKind::ZeroAggregate}});
  EXPECT_EQ(r.n, 3u);
  EXPECT_NEAR(*r.mse, 1.0 / 3.0, 1e-15);
  EXPECT_EQ(r.per_pair.front().pair_id, 3);
  EXPECT_EQ(r.failures.front().pair_id, 2);
  EXPECT_EQ(r.spearman, 1.0);
}

TEST(Evaluate, FailuresAndOrderIndependence) {
  std::vector<SickRecord> records = {
      {1, "A dog walked", "The cat", 3.0, "NEUTRAL"},
      {2, "It is the", "The man", 2.0, "NEUTRAL"},  // all stopwords
      {3, "Men play guitars", "A child strums", 4.0, "NEUTRAL"},
      {4, "The dog", "The dog", 5.0, "ENTAILMENT"},
  };
  const EvalReport r = evaluate(mini(), presets::model1(), SimilarityKind::Cosine, records, 1);
  EXPECT_EQ(r.n, 3u);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].pair_id, 2);
  EXPECT_EQ(r.failures[0].kind, ErrorKind::EmptySentence);
  ASSERT_TRUE(r.mse.has_value());
  ASSERT_TRUE(r.spearman.has_value());

  std::reverse(records.begin(), records.end());
  const EvalReport back = evaluate(mini(), presets::model1(), SimilarityKind::Cosine, records, 4);
  EXPECT_EQ(back.mse, r.mse);
  EXPECT_EQ(back.spearman, r.spearman);
  ASSERT_EQ(back.per_pair.size(), r.per_pair.size());
  for (std::size_t i = 0; i < r.per_pair.size(); ++i) {
    EXPECT_EQ(back.per_pair[i].pair_id, r.per_pair[i].pair_id);
    EXPECT_EQ(back.per_pair[i].predicted, r.per_pair[i].predicted);
  }
  EXPECT_EQ(kind_of([] {
              evaluate(mini(), presets::model1(), SimilarityKind::Cosine, std::vector<SickRecord>{});
            }),
            ErrorKind::EmptyInput);
}
