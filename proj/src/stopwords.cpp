#include <fstream>

#include "frsim/error.hpp"
#include "frsim/pipeline.hpp"

namespace frsim {

namespace {

// Apostrophes are stripped before lookup, so contractions appear without one.
constexpr std::string_view kBuiltin[] = {
    // articles and determiners
    "a", "an", "the", "this", "that", "these", "those", "some", "any", "each", "every",
    "either", "neither", "another", "such", "there",
    // conjunctions
    "and", "or", "but", "nor", "so", "yet", "if", "than", "then", "because", "while",
    "although", "though", "whether", "as",
    // prepositions
    "about", "above", "across", "after", "against", "along", "among", "around", "at",
    "before", "behind", "below", "beneath", "beside", "between", "beyond", "by", "down",
    "during", "for", "from", "in", "inside", "into", "near", "of", "off", "on", "onto",
    "out", "outside", "over", "through", "to", "toward", "towards", "under", "up", "upon",
    "with", "within", "without",
    // pronouns
    "i", "me", "my", "mine", "myself", "you", "your", "yours", "yourself", "he", "him",
    "his", "himself", "she", "her", "hers", "herself", "it", "its", "itself", "we", "us",
    "our", "ours", "ourselves", "they", "them", "their", "theirs", "themselves", "who",
    "whom", "whose", "which", "what",
    // be / have / do
    "be", "is", "am", "are", "was", "were", "been", "being", "isnt", "arent", "wasnt",
    "werent", "have", "has", "had", "having", "hasnt", "havent", "hadnt", "do", "does",
    "did", "doing", "dont", "doesnt", "didnt",
    // modals
    "can", "cannot", "cant", "could", "couldnt", "may", "might", "must", "shall", "should",
    "shouldnt", "will", "wont", "would", "wouldnt",
};

}  // namespace

const Stopwords& Stopwords::builtin() {
  static const Stopwords words([] {
    std::unordered_set<std::string> set;
    for (std::string_view w : kBuiltin) set.emplace(w);
    return set;
  }());
  return words;
}

Stopwords Stopwords::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open stopword file " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    words.insert(line.substr(first, last - first + 1));
  }
  return Stopwords(std::move(words));
}

}  // namespace frsim
