#include "frsim/tuner.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>

#include "frsim/fisdsl.hpp"
#include "frsim/parallel.hpp"

namespace frsim {

namespace {

TermRef parse_term_ref(const std::string& key) {
  const auto dot = key.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == key.size()) {
    throw Error(ErrorKind::InvalidConfig, "grid term '" + key + "' must look like variable.term");
  }
  return TermRef{key.substr(0, dot), key.substr(dot + 1)};
}

std::string ref_name(const TermRef& r) { return r.variable + "." + r.term; }

void check_ref(const FisConfig& base, const TermRef& ref) {
  const LinguisticVariable* v = base.find_variable(ref.variable);
  if (!v || !v->find_term(ref.term)) {
    throw Error(ErrorKind::UnknownVariableOrTerm, "grid term '" + ref_name(ref) + "' is not in the base config");
  }
}

std::string format_mf(const TriangularMF& mf) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "tri(%.6g, %.6g, %.6g)", mf.a, mf.b, mf.c);
  return buf;
}

// Every point of [lo, hi] must have a positive degree in some term. Zeros
// can only occur at term breakpoints or strictly between them, so those
// points and the midpoints between consecutive ones decide coverage.
bool covers_domain(const LinguisticVariable& v) {
  std::vector<double> points{v.lo(), v.hi()};
  for (const Term& t : v.terms()) {
    points.insert(points.end(), {t.mf.a, t.mf.b, t.mf.c});
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  for (std::size_t i = 0; i + 1 < n; ++i) points.push_back((points[i] + points[i + 1]) / 2.0);
  for (double x : points) {
    if (x < v.lo() || x > v.hi()) continue;
    double best = 0.0;
    for (const Term& t : v.terms()) best = std::max(best, mf_eval(t.mf, x));
    if (best <= 0.0) return false;
  }
  return true;
}

GridAxis tied_axis(std::vector<TermRef> terms, std::vector<TriangularMF> candidates) {
  return GridAxis{std::move(terms), std::move(candidates)};
}

}  // namespace

GridSpec default_grid_spec() {
  std::vector<TriangularMF> average;
  for (double b : {0.6, 0.65, 0.7}) {
    for (double c : {0.85, 0.9, 0.95}) average.push_back({0.4, b, c});
  }
  std::vector<TriangularMF> high;
  for (double a : {0.8, 0.85, 0.9}) high.push_back({a, 1.0, 1.0});
  GridSpec spec{presets::model1(), {}};
  spec.axes.push_back(tied_axis({{"similarity_lower", "average"}, {"similarity_upper", "average"}}, average));
  spec.axes.push_back(tied_axis({{"similarity_lower", "high"}, {"similarity_upper", "good"}}, high));
  return spec;
}

namespace {

GridSpec parse_grid_spec_unchecked(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("terms") || !json["terms"].is_object()) {
    throw Error(ErrorKind::InvalidConfig, "grid spec needs a \"terms\" object");
  }
  FisConfig base = presets::model1();
  if (json.contains("base")) {
    const auto name = json["base"].get<std::string>();
    auto preset = presets::by_name(name);
    if (!preset) throw Error(ErrorKind::InvalidConfig, "unknown base preset '" + name + "'");
    base = *preset;
  }

  std::vector<std::pair<TermRef, std::vector<TriangularMF>>> lists;
  for (const auto& [key, triples] : json["terms"].items()) {
    TermRef ref = parse_term_ref(key);
    check_ref(base, ref);
    if (!triples.is_array() || triples.empty()) {
      throw Error(ErrorKind::InvalidConfig, "grid term '" + key + "' needs a nonempty list");
    }
    std::vector<TriangularMF> cands;
    for (const auto& t : triples) {
      if (!t.is_array() || t.size() != 3) {
        throw Error(ErrorKind::InvalidConfig, "grid term '" + key + "': each entry must be [a, b, c]");
      }
      cands.push_back({t[0].get<double>(), t[1].get<double>(), t[2].get<double>()});
    }
    lists.emplace_back(std::move(ref), std::move(cands));
  }

  auto list_of = [&](const TermRef& ref) -> std::vector<TriangularMF>& {
    for (auto& [r, c] : lists) {
      if (r == ref) return c;
    }
    throw Error(ErrorKind::InvalidConfig, "tied term '" + ref_name(ref) + "' has no candidate list");
  };

  GridSpec spec{base, {}};
  std::set<std::string> used;
  if (json.contains("tie")) {
    for (const auto& group : json["tie"]) {
      GridAxis axis;
      for (const auto& key : group) {
        TermRef ref = parse_term_ref(key.get<std::string>());
        const auto& cands = list_of(ref);
        if (!used.insert(ref_name(ref)).second) {
          throw Error(ErrorKind::InvalidConfig, "term '" + ref_name(ref) + "' is tied twice");
        }
        if (axis.terms.empty()) {
          axis.candidates = cands;
        } else if (cands != axis.candidates) {
          throw Error(ErrorKind::InvalidConfig, "tied terms must list the same triples");
        }
        axis.terms.push_back(std::move(ref));
      }
      if (axis.terms.empty()) throw Error(ErrorKind::InvalidConfig, "empty tie group");
      spec.axes.push_back(std::move(axis));
    }
  }
  for (auto& [ref, cands] : lists) {
    if (used.count(ref_name(ref))) continue;
    spec.axes.push_back(GridAxis{{ref}, cands});
  }
  return spec;
}

}  // namespace

GridSpec parse_grid_spec(const nlohmann::json& json) {
  try {
    return parse_grid_spec_unchecked(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("grid spec: ") + e.what());
  }
}

GridSpec load_grid_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open grid spec " + path.string());
  nlohmann::json json;
  try {
    in >> json;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  return parse_grid_spec(json);
}

std::vector<Candidate> grid_candidates(const GridSpec& spec) {
  for (const GridAxis& axis : spec.axes) {
    if (axis.candidates.empty()) throw Error(ErrorKind::EmptyGrid, "grid axis without candidates");
    for (const TermRef& ref : axis.terms) check_ref(spec.base, ref);
  }

  std::vector<Candidate> out;
  std::vector<std::size_t> pick(spec.axes.size(), 0);
  std::size_t enumerated = 0;
  for (bool more = true; more; ++enumerated) {
    FisConfig config = spec.base;
    std::string label;
    bool valid = true;
    for (std::size_t a = 0; a < spec.axes.size() && valid; ++a) {
      const GridAxis& axis = spec.axes[a];
      const TriangularMF& mf = axis.candidates[pick[a]];
      for (const TermRef& ref : axis.terms) {
        const LinguisticVariable& v = *config.find_variable(ref.variable);
        std::vector<Term> terms = v.terms();
        for (Term& t : terms) {
          if (t.name == ref.term) t.mf = mf;
        }
        try {
          config = config.with_variable(LinguisticVariable(v.name(), v.lo(), v.hi(), std::move(terms)));
        } catch (const Error&) {
          valid = false;
          break;
        }
        if (!label.empty()) label += ", ";
        label += ref_name(ref) + "=" + format_mf(mf);
      }
    }
    if (valid && covers_domain(config.lower()) && covers_domain(config.upper()) &&
        covers_domain(config.output())) {
      out.push_back(Candidate{enumerated, label.empty() ? "base" : label, std::move(config)});
    }
    // Odometer increment, last axis fastest.
    more = false;
    for (std::size_t a = spec.axes.size(); a-- > 0;) {
      if (++pick[a] < spec.axes[a].candidates.size()) {
        more = true;
        break;
      }
      pick[a] = 0;
    }
  }
  if (out.empty()) throw Error(ErrorKind::EmptyGrid, "every grid combination was filtered out");
  return out;
}

std::vector<ScoredPair> score_pairs(const WordnetDb& db, std::span<const SickRecord> records,
                                    SimilarityKind kind, unsigned jobs,
                                    std::vector<PairFailure>& failures, const Stopwords& stopwords) {
  struct Slot {
    std::optional<ScoredPair> pair;
    ErrorKind failure = ErrorKind::EmptySentence;
  };
  std::vector<Slot> slots(records.size());
  parallel_for(records.size(), jobs, [&](std::size_t i) {
    const SickRecord& r = records[i];
    try {
      const SimilarityPair s = sentence_similarities(db, r.sentence_a, r.sentence_b, kind, stopwords);
      slots[i].pair = ScoredPair{r.pair_id, r.relatedness, s.lower, s.upper};
    } catch (const Error& e) {
      slots[i].failure = e.kind();
    }
  });
  std::vector<ScoredPair> pairs;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].pair) {
      pairs.push_back(*slots[i].pair);
    } else {
      failures.push_back(PairFailure{records[i].pair_id, slots[i].failure});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const ScoredPair& a, const ScoredPair& b) {
    return std::tie(a.pair_id, a.gold, a.lower, a.upper) < std::tie(b.pair_id, b.gold, b.lower, b.upper);
  });
  return pairs;
}

TuneResult tune_scored(std::span<const ScoredPair> pairs, std::span<const Candidate> candidates,
                       unsigned jobs) {
  if (candidates.empty()) throw Error(ErrorKind::EmptyGrid, "no candidates to tune");
  if (pairs.empty()) throw Error(ErrorKind::EmptyInput, "no training pairs");

  std::vector<LeaderboardEntry> board(candidates.size());
  parallel_for(candidates.size(), jobs, [&](std::size_t c) {
    LeaderboardEntry& e = board[c];
    e.id = candidates[c].id;
    e.label = candidates[c].label;
    double sum = 0.0;
    for (const ScoredPair& p : pairs) {
      try {
        const double d = rank(candidates[c].config, p.lower, p.upper) - p.gold;
        sum += d * d;
        ++e.n;
      } catch (const Error&) {
        ++e.failures;
      }
    }
    e.mse = e.n ? sum / static_cast<double>(e.n) : std::numeric_limits<double>::infinity();
  });

  std::size_t best = 0;
  for (std::size_t c = 1; c < board.size(); ++c) {
    if (board[c].mse < board[best].mse) best = c;
  }
  TuneResult result{candidates[best], {}, {}, pairs.size()};
  std::stable_sort(board.begin(), board.end(), [](const LeaderboardEntry& a, const LeaderboardEntry& b) {
    return a.mse < b.mse || (a.mse == b.mse && a.id < b.id);
  });
  result.leaderboard = std::move(board);
  return result;
}

TuneResult tune(const WordnetDb& db, std::span<const SickRecord> train,
                std::span<const Candidate> candidates, SimilarityKind kind, unsigned jobs,
                const Stopwords& stopwords) {
  if (train.empty()) throw Error(ErrorKind::EmptyInput, "no training records");
  if (candidates.empty()) throw Error(ErrorKind::EmptyGrid, "no candidates to tune");
  std::vector<PairFailure> skipped;
  const auto pairs = score_pairs(db, train, kind, jobs, skipped, stopwords);
  TuneResult result = tune_scored(pairs, candidates, jobs);
  result.skipped = std::move(skipped);
  return result;
}

}  // namespace frsim
