#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace frsim {

// Only the two parts of speech that carry a hypernym taxonomy are loaded.
enum class PartOfSpeech : std::uint8_t { Noun, Verb };

char pos_tag(PartOfSpeech pos);

struct SynsetId {
  std::uint32_t offset = 0;  // byte offset of the record in data.<pos>
  PartOfSpeech pos = PartOfSpeech::Noun;

  auto operator<=>(const SynsetId&) const = default;
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;
  std::vector<SynsetId> hypernym_ids;  // '@' and '@i' pointers
  // "<first lemma>.<pos>.<sense number>", e.g. "dog.n.01". Orders ties
  // between equally deep subsumers.
  std::string name;
};

// Parsed WordNet 3.0 noun and verb databases. Immutable after load(), so a
// single instance can serve concurrent queries.
class WordnetDb {
 public:
  // Reads index.{noun,verb}, data.{noun,verb} and {noun,verb}.exc from a
  // WordNet "dict" directory. Throws MissingWordnetFile or ParseError.
  static WordnetDb load(const std::filesystem::path& directory);

  std::size_t synset_count(PartOfSpeech pos) const;
  const Synset* find(SynsetId id) const;
  // Synsets of an indexed lemma in index-file (sense) order.
  std::span<const SynsetId> lemma_synsets(std::string_view lemma, PartOfSpeech pos) const;

  // Indexed base forms of a lowercase surface word: the word itself, then
  // exception-list forms, or suffix-detachment candidates when the word has
  // no exception entry.
  std::vector<std::string> morphy(std::string_view word, PartOfSpeech pos) const;

  // Nouns first, then verbs; sense order within each; no duplicates.
  std::vector<const Synset*> synsets_of(std::string_view word) const;

  // Nodes on the shortest hypernym path to a root (a root has depth 1).
  int depth(const Synset& s) const;
  // Nodes on the longest hypernym path to a root.
  int max_depth(const Synset& s) const;

  // Wu-Palmer similarity of two same-pos synsets:
  //   2 d / (len1 + len2 + 2 d)
  // The subsumer is the common hypernym with the greatest shortest-path depth
  // (ties: either argument itself, else the smallest name); d is its longest
  // path depth in nodes and len1/len2 are shortest-path edge counts. Verb
  // trees have no shared root, so a virtual root is added for verb pairs.
  double wup_similarity(const Synset& s1, const Synset& s2) const;

  // 1.0 for identical strings, otherwise the best Wu-Palmer score over
  // same-pos synset pairs; 0.0 when no such pair exists.
  double word_similarity(std::string_view w1, std::string_view w2) const;

 private:
  struct PosTable {
    std::vector<Synset> synsets;
    std::unordered_map<std::uint32_t, std::uint32_t> by_offset;
    std::vector<std::vector<std::uint32_t>> parents;
    std::vector<int> min_depth;  // edges
    std::vector<int> max_depth;  // edges
    std::unordered_map<std::string, std::vector<SynsetId>> lemma_index;
    std::unordered_map<std::string, std::vector<std::string>> exceptions;
  };

  struct Ancestor {
    std::uint32_t index;
    int distance;
  };

  const PosTable& table(PartOfSpeech pos) const;
  std::uint32_t index_of(const Synset& s) const;
  std::vector<Ancestor> ancestors(const PosTable& t, std::uint32_t start) const;
  double wup_with_ancestors(const PosTable& t, std::uint32_t i1, const std::vector<Ancestor>& a1,
                            std::uint32_t i2, const std::vector<Ancestor>& a2) const;
  int shortest_distance(const PosTable& t, bool virtual_root, std::uint32_t from,
                        const std::vector<Ancestor>& from_ancestors, std::uint32_t to) const;

  PosTable noun_;
  PosTable verb_;
};

inline WordnetDb load_wordnet(const std::filesystem::path& directory) {
  return WordnetDb::load(directory);
}

}  // namespace frsim
