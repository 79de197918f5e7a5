#include "frsim/pipeline.hpp"

#include <algorithm>
#include <cctype>

#include "frsim/error.hpp"

namespace frsim {

std::string_view to_string(SimilarityKind kind) {
  return kind == SimilarityKind::Cosine ? "cosine" : "jaccard";
}

SimilarityKind parse_similarity_kind(std::string_view name) {
  if (name == "cosine") return SimilarityKind::Cosine;
  if (name == "jaccard") return SimilarityKind::Jaccard;
  throw Error(ErrorKind::InvalidConfig, "unknown similarity kind '" + std::string(name) + "'");
}

double set_similarity(SimilarityKind kind, const FuzzySet& a, const FuzzySet& b) {
  return kind == SimilarityKind::Cosine ? cosine_similarity(a, b) : jaccard_similarity(a, b);
}

std::vector<std::string> tokenize(std::string_view text, const Stopwords& stopwords) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty() && !stopwords.contains(current)) tokens.push_back(current);
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\'') continue;
    if (text.substr(i, 3) == "\xE2\x80\x99") {  // right single quotation mark
      i += 2;
      continue;
    }
    if (c < 0x80 && std::isalnum(c)) {
      current += static_cast<char>(std::tolower(c));
    } else {
      flush();
    }
  }
  flush();
  if (tokens.empty()) {
    throw Error(ErrorKind::EmptySentence,
                "no content words in \"" + std::string(text.substr(0, 80)) + "\"");
  }
  return tokens;
}

UniversePtr build_universe(std::span<const std::string> tokens1,
                           std::span<const std::string> tokens2) {
  std::vector<std::string> all(tokens1.begin(), tokens1.end());
  all.insert(all.end(), tokens2.begin(), tokens2.end());
  return make_universe(std::move(all));
}

FuzzyRelation relation_matrix(const WordnetDb& db, const UniversePtr& universe) {
  const std::size_t n = universe->size();
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    values[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = db.word_similarity((*universe)[i], (*universe)[j]);
      values[i * n + j] = s;
      values[j * n + i] = s;
    }
  }
  return FuzzyRelation(universe, std::move(values));
}

FuzzySet membership_vector(const WordnetDb& db, std::span<const std::string> tokens,
                           const UniversePtr& universe) {
  std::vector<double> mu(universe->size(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const std::string& w = (*universe)[i];
    if (std::find(tokens.begin(), tokens.end(), w) != tokens.end()) {
      mu[i] = 1.0;
      continue;
    }
    for (const std::string& v : tokens) mu[i] = std::max(mu[i], db.word_similarity(w, v));
  }
  return FuzzySet(universe, std::move(mu));
}

FuzzySet membership_vector(const FuzzyRelation& relation, std::span<const std::string> tokens) {
  const Universe& u = relation.universe();
  std::vector<std::size_t> members;
  for (const std::string& t : tokens) {
    auto idx = u.index_of(t);
    if (!idx) throw Error(ErrorKind::UniverseMismatch, "token '" + t + "' is not in the universe");
    members.push_back(*idx);
  }
  std::vector<double> mu(u.size(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t m : members) mu[i] = std::max(mu[i], relation(i, m));
  }
  return FuzzySet(relation.universe_ptr(), std::move(mu));
}

SimilarityPair sentence_similarities(const WordnetDb& db, std::string_view s1,
                                     std::string_view s2, SimilarityKind kind,
                                     const Stopwords& stopwords) {
  const auto t1 = tokenize(s1, stopwords);
  const auto t2 = tokenize(s2, stopwords);
  const UniversePtr universe = build_universe(t1, t2);
  const FuzzyRelation rel = relation_matrix(db, universe);
  const FuzzySet mu1 = membership_vector(rel, t1);
  const FuzzySet mu2 = membership_vector(rel, t2);
  SimilarityPair out;
  out.lower = set_similarity(kind, lower_approximation(rel, mu1), lower_approximation(rel, mu2));
  out.upper = set_similarity(kind, upper_approximation(rel, mu1), upper_approximation(rel, mu2));
  out.universe_size = universe->size();
  return out;
}

RankResult sentence_rank(const WordnetDb& db, const FisConfig& config, std::string_view s1,
                         std::string_view s2, SimilarityKind kind, const Stopwords& stopwords) {
  const SimilarityPair sims = sentence_similarities(db, s1, s2, kind, stopwords);
  RankResult r;
  r.lower_similarity = sims.lower;
  r.upper_similarity = sims.upper;
  r.rank = rank(config, sims.lower, sims.upper);
  r.universe_size = sims.universe_size;
  r.similarity_kind = kind;
  return r;
}

}  // namespace frsim
