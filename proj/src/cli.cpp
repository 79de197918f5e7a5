#include "frsim/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "frsim/dataset.hpp"
#include "frsim/fisdsl.hpp"
#include "frsim/json_format.hpp"
#include "frsim/parallel.hpp"
#include "frsim/pipeline.hpp"
#include "frsim/tuner.hpp"
#include "frsim/wordnet.hpp"

namespace frsim {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string wordnet;
  std::string fis;
  std::string similarity = "cosine";
  std::string stopwords;
  std::string dataset;
  std::string grid;
  std::string out_path;
  std::vector<std::string> words;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t resolution = kDefaultResolution;
  bool strict_rule2 = false;
  bool full_test = false;
  std::size_t n_train = 500;
  std::size_t n_test = 500;
  std::uint64_t seed = 42;
  unsigned jobs = default_jobs();
};

WordnetDb open_wordnet(const Options& o) {
  std::string dir = o.wordnet;
  if (dir.empty()) {
    if (const char* env = std::getenv("WORDNET_DIR")) dir = env;
  }
  if (dir.empty()) {
    throw Error(ErrorKind::MissingWordnetFile, "no WordNet directory: pass --wordnet or set WORDNET_DIR");
  }
  return WordnetDb::load(dir);
}

std::string config_name(const std::string& fis) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (fis.rfind(kBuiltin, 0) == 0) return fis.substr(kBuiltin.size());
  return std::filesystem::path(fis).stem().string();
}

FisConfig open_fis(const Options& o) {
  FisConfig config = load_fis(o.fis);
  if (o.strict_rule2) config = with_verbatim_rule2(config);
  return config.with_resolution(o.resolution);
}

Stopwords open_stopwords(const Options& o) {
  return o.stopwords.empty() ? Stopwords::builtin() : Stopwords::load(o.stopwords);
}

Json report_json(const EvalReport& r) {
  Json per_pair = Json::array();
  for (const PairPrediction& p : r.per_pair) {
    per_pair.push_back({{"pair_id", p.pair_id},
                        {"predicted", p.predicted},
                        {"gold", p.gold},
                        {"lower", p.lower},
                        {"upper", p.upper}});
  }
  Json failures = Json::array();
  for (const PairFailure& f : r.failures) {
    failures.push_back({{"pair_id", f.pair_id}, {"error", std::string(to_string(f.kind))}});
  }
  Json j;
  j["n"] = r.n;
  j["n_failures"] = r.failures.size();
  j["mse"] = r.mse ? Json(*r.mse) : Json(nullptr);
  j["spearman"] = r.spearman ? Json(*r.spearman) : Json(nullptr);
  j["per_pair"] = std::move(per_pair);
  j["failures"] = std::move(failures);
  return j;
}

Json cmd_rank(const Options& o) {
  const WordnetDb db = open_wordnet(o);
  const FisConfig config = open_fis(o);
  const Stopwords stopwords = open_stopwords(o);
  const SimilarityKind kind = parse_similarity_kind(o.similarity);
  const RankResult r = sentence_rank(db, config, o.words.at(0), o.words.at(1), kind, stopwords);
  Json j;
  j["sentence_a"] = o.words[0];
  j["sentence_b"] = o.words[1];
  j["tokens_a"] = tokenize(o.words[0], stopwords);
  j["tokens_b"] = tokenize(o.words[1], stopwords);
  j["similarity"] = std::string(to_string(kind));
  j["universe_size"] = r.universe_size;
  j["lower"] = r.lower_similarity;
  j["upper"] = r.upper_similarity;
  j["rank"] = r.rank;
  return j;
}

Json cmd_fis_eval(const Options& o) {
  const FisConfig config = open_fis(o);
  Json j;
  j["lower"] = o.lower;
  j["upper"] = o.upper;
  j["resolution"] = config.resolution();
  j["strict_rule2"] = o.strict_rule2;
  j["rank"] = rank(config, o.lower, o.upper);
  return j;
}

Json cmd_eval(const Options& o) {
  const WordnetDb db = open_wordnet(o);
  const FisConfig config = open_fis(o);
  const Stopwords stopwords = open_stopwords(o);
  const SimilarityKind kind = parse_similarity_kind(o.similarity);
  const auto records = load_sick(o.dataset);

  Json split;
  std::vector<SickRecord> test;
  if (o.full_test) {
    split = {{"mode", "full-test"}, {"n_records", records.size()}};
    test = records;
  } else {
    Split s = split_random(records, o.n_train, o.n_test, o.seed);
    split = {{"mode", "subsample"}, {"n_train", o.n_train}, {"n_test", o.n_test}};
    test = std::move(s.test);
  }
  const EvalReport report = evaluate(db, config, kind, test, o.jobs, stopwords);
  Json j;
  j["config_name"] = config_name(o.fis);
  j["similarity"] = std::string(to_string(kind));
  j["seed"] = o.full_test ? Json(nullptr) : Json(o.seed);
  j["split"] = std::move(split);
  const Json body = report_json(report);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

Json cmd_tune(const Options& o) {
  const WordnetDb db = open_wordnet(o);
  const Stopwords stopwords = open_stopwords(o);
  const SimilarityKind kind = parse_similarity_kind(o.similarity);
  const GridSpec spec = o.grid == "builtin:default" ? default_grid_spec() : load_grid_spec(o.grid);
  const auto records = load_sick(o.dataset);
  const Split split = split_random(records, o.n_train, o.n_test, o.seed);
  const auto candidates = grid_candidates(spec);
  const TuneResult result = tune(db, split.train, candidates, kind, o.jobs, stopwords);

  {
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::FileNotFound, "cannot write " + o.out_path);
    out << serialize_fis(result.best.config);
  }

  Json board = Json::array();
  for (const LeaderboardEntry& e : result.leaderboard) {
    board.push_back({{"id", e.id}, {"label", e.label}, {"mse", e.mse}, {"n", e.n}, {"failures", e.failures}});
  }
  Json j;
  j["seed"] = o.seed;
  j["similarity"] = std::string(to_string(kind));
  j["n_train"] = o.n_train;
  j["n_train_scored"] = result.n_pairs;
  j["n_candidates"] = candidates.size();
  j["best_id"] = result.best.id;
  j["best_label"] = result.best.label;
  j["best_mse"] = result.leaderboard.front().mse;
  j["out"] = o.out_path;
  j["leaderboard"] = std::move(board);
  if (o.n_test > 0) {
    const FisConfig best = result.best.config.with_resolution(o.resolution);
    Json test = report_json(evaluate(db, best, kind, split.test, o.jobs, stopwords));
    test["n_test"] = o.n_test;
    j["test"] = std::move(test);
  }
  return j;
}

Json cmd_wordnet_sim(const Options& o) {
  const WordnetDb db = open_wordnet(o);
  Json j;
  j["word1"] = o.words.at(0);
  j["word2"] = o.words.at(1);
  j["synsets1"] = db.synsets_of(o.words[0]).size();
  j["synsets2"] = db.synsets_of(o.words[1]).size();
  j["similarity"] = db.word_similarity(o.words[0], o.words[1]);
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fuzzy-rough sentence similarity with a Mamdani rank"};
  app.require_subcommand(1);

  auto add_wordnet = [&](CLI::App* c) {
    c->add_option("--wordnet", o.wordnet, "WordNet 3.0 dict directory (default: $WORDNET_DIR)");
  };
  auto add_similarity = [&](CLI::App* c) {
    c->add_option("--similarity", o.similarity, "cosine or jaccard")
        ->check(CLI::IsMember({"cosine", "jaccard"}));
    c->add_option("--stopwords", o.stopwords, "stopword file, one token per line");
  };
  auto add_jobs = [&](CLI::App* c) {
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* rank_cmd = app.add_subcommand("rank", "rank one sentence pair");
  add_wordnet(rank_cmd);
  rank_cmd->add_option("--fis", o.fis, ".fis file or builtin:model1")->required();
  add_similarity(rank_cmd);
  rank_cmd->add_option("sentences", o.words, "two sentences")->expected(2)->required();

  CLI::App* fis_cmd = app.add_subcommand("fis-eval", "evaluate the FIS at one input point");
  fis_cmd->add_option("--fis", o.fis, ".fis file or builtin:model1")->required();
  fis_cmd->add_option("--lower", o.lower, "lower similarity")->required();
  fis_cmd->add_option("--upper", o.upper, "upper similarity")->required();
  fis_cmd->add_option("--resolution", o.resolution, "centroid grid samples")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  fis_cmd->add_flag("--strict-rule2", o.strict_rule2, "use the literal published second rule");

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate on a SICK file");
  add_wordnet(eval_cmd);
  eval_cmd->add_option("--fis", o.fis, ".fis file or builtin:model1")->required();
  eval_cmd->add_option("--dataset", o.dataset, "SICK TSV")->required();
  auto* n_train = eval_cmd->add_option("--n-train", o.n_train, "training subsample size");
  auto* n_test = eval_cmd->add_option("--n-test", o.n_test, "test subsample size");
  auto* seed = eval_cmd->add_option("--seed", o.seed, "split seed");
  eval_cmd->add_flag("--full-test", o.full_test, "score every record of the file")
      ->excludes(n_train)
      ->excludes(n_test)
      ->excludes(seed);
  add_similarity(eval_cmd);
  add_jobs(eval_cmd);

  CLI::App* tune_cmd = app.add_subcommand("tune", "grid-search membership parameters");
  add_wordnet(tune_cmd);
  tune_cmd->add_option("--grid", o.grid, "grid spec JSON or builtin:default")->required();
  tune_cmd->add_option("--dataset", o.dataset, "SICK TSV")->required();
  tune_cmd->add_option("--n-train", o.n_train, "training subsample size");
  tune_cmd->add_option("--n-test", o.n_test, "held-out pairs to score the winner on (0 to skip)");
  tune_cmd->add_option("--seed", o.seed, "split seed");
  tune_cmd->add_option("--out", o.out_path, "where to write the winning .fis")->required();
  add_similarity(tune_cmd);
  add_jobs(tune_cmd);

  CLI::App* sim_cmd = app.add_subcommand("wordnet-sim", "word-to-word Wu-Palmer similarity");
  add_wordnet(sim_cmd);
  sim_cmd->add_option("words", o.words, "two words")->expected(2)->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Json result;
    if (*rank_cmd) {
      result = cmd_rank(o);
    } else if (*fis_cmd) {
      result = cmd_fis_eval(o);
    } else if (*eval_cmd) {
      result = cmd_eval(o);
    } else if (*tune_cmd) {
      result = cmd_tune(o);
    } else {
      result = cmd_wordnet_sim(o);
    }
    out << format_json(result);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    out << format_json(Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    return 2;
  }
}

}  // namespace frsim
