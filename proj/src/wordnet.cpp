#include "frsim/wordnet.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <utility>

#include "frsim/error.hpp"

namespace frsim {

namespace {

constexpr std::uint32_t kVirtualRoot = std::numeric_limits<std::uint32_t>::max();

constexpr std::pair<std::string_view, std::string_view> kNounRules[] = {
    {"s", ""},      {"ses", "s"},   {"xes", "x"},   {"zes", "z"},
    {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"},
};

constexpr std::pair<std::string_view, std::string_view> kVerbRules[] = {
    {"s", ""}, {"ies", "y"}, {"es", "e"}, {"es", ""}, {"ed", "e"}, {"ed", ""}, {"ing", "e"}, {"ing", ""},
};

std::string_view pos_suffix(PartOfSpeech pos) { return pos == PartOfSpeech::Noun ? "noun" : "verb"; }

class LineReader {
 public:
  LineReader(const std::filesystem::path& dir, std::string name) : name_(std::move(name)) {
    const auto path = dir / name_;
    in_.open(path, std::ios::binary);
    if (!in_) throw Error(ErrorKind::MissingWordnetFile, "missing WordNet file " + path.string());
  }

  // Next non-license line; false at end of file.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.rfind("  ", 0) == 0 || line.empty()) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw Error(ErrorKind::ParseError, name_ + ":" + std::to_string(number_) + ": " + reason);
  }

 private:
  std::string name_;
  std::ifstream in_;
  std::size_t number_ = 0;
};

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_int(std::string_view s, T& out, int base = 10) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

char pos_tag(PartOfSpeech pos) { return pos == PartOfSpeech::Noun ? 'n' : 'v'; }

WordnetDb WordnetDb::load(const std::filesystem::path& directory) {
  WordnetDb db;
  for (PartOfSpeech pos : {PartOfSpeech::Noun, PartOfSpeech::Verb}) {
    PosTable& t = pos == PartOfSpeech::Noun ? db.noun_ : db.verb_;
    const char tag = pos_tag(pos);
    const std::string suffix(pos_suffix(pos));

    // Open everything up front so a missing file is reported before parsing.
    LineReader data(directory, "data." + suffix);
    LineReader index(directory, "index." + suffix);
    LineReader exc(directory, suffix + ".exc");

    // data.<pos>: offset lex_filenum ss_type w_cnt {word lex_id} p_cnt
    //             {symbol offset pos source/target} [frames] | gloss
    std::string line;
    std::vector<std::vector<SynsetId>> raw_parents;
    while (data.next(line)) {
      const auto bar = line.find(" | ");
      const auto fields = split_spaces(std::string_view(line).substr(0, bar));
      if (fields.size() < 6) data.fail("truncated synset record");
      Synset s;
      s.id.pos = pos;
      if (!parse_int(fields[0], s.id.offset)) data.fail("bad synset offset");
      const std::string_view ss_type = fields[2];
      if (ss_type.size() != 1 || ss_type[0] != tag) data.fail("unexpected synset type");
      std::size_t w_cnt = 0;
      if (!parse_int(fields[3], w_cnt, 16) || w_cnt == 0) data.fail("bad word count");
      std::size_t k = 4;
      if (fields.size() < k + 2 * w_cnt + 1) data.fail("truncated lemma list");
      for (std::size_t w = 0; w < w_cnt; ++w, k += 2) s.lemmas.emplace_back(fields[k]);
      std::size_t p_cnt = 0;
      if (!parse_int(fields[k], p_cnt)) data.fail("bad pointer count");
      ++k;
      if (fields.size() < k + 4 * p_cnt) data.fail("truncated pointer list");
      for (std::size_t p = 0; p < p_cnt; ++p, k += 4) {
        const std::string_view symbol = fields[k];
        if (symbol != "@" && symbol != "@i") continue;
        SynsetId target;
        if (!parse_int(fields[k + 1], target.offset)) data.fail("bad pointer offset");
        if (fields[k + 2].size() != 1 || fields[k + 2][0] != tag) {
          data.fail("hypernym points to another part of speech");
        }
        target.pos = pos;
        s.hypernym_ids.push_back(target);
      }
      if (!t.by_offset.emplace(s.id.offset, static_cast<std::uint32_t>(t.synsets.size())).second) {
        data.fail("duplicate synset offset");
      }
      t.synsets.push_back(std::move(s));
    }

    // index.<pos>: lemma pos synset_cnt p_cnt {symbol} sense_cnt tagsense_cnt {offset}
    while (index.next(line)) {
      const auto fields = split_spaces(line);
      if (fields.size() < 4) index.fail("truncated index record");
      std::size_t n_synsets = 0;
      std::size_t n_pointers = 0;
      if (!parse_int(fields[2], n_synsets) || n_synsets == 0) index.fail("bad synset count");
      if (!parse_int(fields[3], n_pointers)) index.fail("bad pointer count");
      const std::size_t first = 4 + n_pointers + 2;
      if (fields.size() != first + n_synsets) index.fail("synset count does not match offsets");
      std::vector<SynsetId> ids;
      for (std::size_t i = 0; i < n_synsets; ++i) {
        SynsetId id{0, pos};
        if (!parse_int(fields[first + i], id.offset)) index.fail("bad synset offset");
        if (!t.by_offset.count(id.offset)) index.fail("offset not present in data file");
        ids.push_back(id);
      }
      t.lemma_index[std::string(fields[0])] = std::move(ids);
    }

    // <pos>.exc: surface base...
    while (exc.next(line)) {
      const auto fields = split_spaces(line);
      if (fields.size() < 2) exc.fail("exception entry without base form");
      auto& bases = t.exceptions[std::string(fields[0])];
      for (std::size_t i = 1; i < fields.size(); ++i) bases.emplace_back(fields[i]);
    }

    // Resolve hypernym links and sense names.
    t.parents.resize(t.synsets.size());
    for (std::size_t i = 0; i < t.synsets.size(); ++i) {
      Synset& s = t.synsets[i];
      for (const SynsetId& h : s.hypernym_ids) {
        auto it = t.by_offset.find(h.offset);
        if (it == t.by_offset.end()) {
          throw Error(ErrorKind::ParseError, "data." + suffix + ": synset " +
                                                 std::to_string(s.id.offset) +
                                                 " has a dangling hypernym " +
                                                 std::to_string(h.offset));
        }
        t.parents[i].push_back(it->second);
      }
      const std::string head = lowercase(s.lemmas.front());
      auto entry = t.lemma_index.find(head);
      std::size_t sense = 0;
      if (entry != t.lemma_index.end()) {
        auto pos_it = std::find(entry->second.begin(), entry->second.end(), s.id);
        if (pos_it != entry->second.end()) sense = static_cast<std::size_t>(pos_it - entry->second.begin()) + 1;
      }
      if (sense == 0) {
        throw Error(ErrorKind::ParseError, "index." + suffix + ": lemma '" + head +
                                               "' does not list synset " +
                                               std::to_string(s.id.offset));
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, ".%c.%02zu", tag, sense);
      s.name = head + buf;
    }

    // Depths by iterative DFS; a grey node reached again means a cycle.
    const std::size_t n = t.synsets.size();
    t.min_depth.assign(n, -1);
    t.max_depth.assign(n, -1);
    std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;
    for (std::uint32_t root = 0; root < n; ++root) {
      if (state[root] == 2) continue;
      stack.emplace_back(root, 0);
      state[root] = 1;
      while (!stack.empty()) {
        auto& [node, next_parent] = stack.back();
        const auto& ps = t.parents[node];
        if (next_parent < ps.size()) {
          const std::uint32_t p = ps[next_parent++];
          if (state[p] == 1) {
            throw Error(ErrorKind::ParseError, "data." + suffix + ": hypernym cycle through synset " +
                                                   std::to_string(t.synsets[p].id.offset));
          }
          if (state[p] == 0) {
            state[p] = 1;
            stack.emplace_back(p, 0);
          }
          continue;
        }
        int lo = 0;
        int hi = 0;
        if (!ps.empty()) {
          lo = std::numeric_limits<int>::max();
          for (std::uint32_t p : ps) {
            lo = std::min(lo, t.min_depth[p] + 1);
            hi = std::max(hi, t.max_depth[p] + 1);
          }
        }
        t.min_depth[node] = lo;
        t.max_depth[node] = hi;
        state[node] = 2;
        stack.pop_back();
      }
    }
  }
  return db;
}

const WordnetDb::PosTable& WordnetDb::table(PartOfSpeech pos) const {
  return pos == PartOfSpeech::Noun ? noun_ : verb_;
}

std::uint32_t WordnetDb::index_of(const Synset& s) const {
  const PosTable& t = table(s.id.pos);
  return static_cast<std::uint32_t>(&s - t.synsets.data());
}

std::size_t WordnetDb::synset_count(PartOfSpeech pos) const { return table(pos).synsets.size(); }

const Synset* WordnetDb::find(SynsetId id) const {
  const PosTable& t = table(id.pos);
  auto it = t.by_offset.find(id.offset);
  return it == t.by_offset.end() ? nullptr : &t.synsets[it->second];
}

std::span<const SynsetId> WordnetDb::lemma_synsets(std::string_view lemma, PartOfSpeech pos) const {
  const PosTable& t = table(pos);
  auto it = t.lemma_index.find(std::string(lemma));
  if (it == t.lemma_index.end()) return {};
  return it->second;
}

std::vector<std::string> WordnetDb::morphy(std::string_view word, PartOfSpeech pos) const {
  const PosTable& t = table(pos);
  std::vector<std::string> candidates{std::string(word)};
  if (auto exc = t.exceptions.find(std::string(word)); exc != t.exceptions.end()) {
    candidates.insert(candidates.end(), exc->second.begin(), exc->second.end());
  } else {
    std::span<const std::pair<std::string_view, std::string_view>> rules =
        pos == PartOfSpeech::Noun ? std::span(kNounRules) : std::span(kVerbRules);
    for (const auto& [suffix, replacement] : rules) {
      if (word.size() >= suffix.size() && word.ends_with(suffix)) {
        candidates.push_back(std::string(word.substr(0, word.size() - suffix.size())) +
                             std::string(replacement));
      }
    }
  }
  std::vector<std::string> out;
  for (std::string& c : candidates) {
    if (t.lemma_index.count(c) && std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<const Synset*> WordnetDb::synsets_of(std::string_view word) const {
  const std::string lower = lowercase(word);
  std::vector<const Synset*> out;
  for (PartOfSpeech pos : {PartOfSpeech::Noun, PartOfSpeech::Verb}) {
    for (const std::string& form : morphy(lower, pos)) {
      for (const SynsetId& id : lemma_synsets(form, pos)) {
        const Synset* s = find(id);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
      }
    }
  }
  return out;
}

int WordnetDb::depth(const Synset& s) const { return table(s.id.pos).min_depth[index_of(s)] + 1; }

int WordnetDb::max_depth(const Synset& s) const {
  return table(s.id.pos).max_depth[index_of(s)] + 1;
}

std::vector<WordnetDb::Ancestor> WordnetDb::ancestors(const PosTable& t, std::uint32_t start) const {
  // Breadth-first, so the first visit records the shortest distance.
  std::vector<Ancestor> out{{start, 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Ancestor cur = out[head];
    for (std::uint32_t p : t.parents[cur.index]) {
      const bool seen = std::any_of(out.begin(), out.end(),
                                    [p](const Ancestor& a) { return a.index == p; });
      if (!seen) out.push_back({p, cur.distance + 1});
    }
  }
  return out;
}

int WordnetDb::shortest_distance(const PosTable& t, bool virtual_root, std::uint32_t from,
                                 const std::vector<Ancestor>& from_ancestors,
                                 std::uint32_t to) const {
  if (from == to) return 0;
  // The virtual root sits one edge above the farthest real ancestor.
  auto with_root = [virtual_root](std::vector<Ancestor> a) {
    if (virtual_root) {
      int far = 0;
      for (const Ancestor& x : a) far = std::max(far, x.distance);
      a.push_back({kVirtualRoot, far + 1});
    }
    return a;
  };
  const std::vector<Ancestor> d1 = with_root(from_ancestors);
  const std::vector<Ancestor> d2 =
      to == kVirtualRoot ? std::vector<Ancestor>{{kVirtualRoot, 0}} : with_root(ancestors(t, to));
  int best = std::numeric_limits<int>::max();
  for (const Ancestor& x : d1) {
    for (const Ancestor& y : d2) {
      if (x.index == y.index) best = std::min(best, x.distance + y.distance);
    }
  }
  if (best == std::numeric_limits<int>::max()) {
    throw Error(ErrorKind::NoCommonAncestor, "synsets are not connected");
  }
  return best;
}

double WordnetDb::wup_with_ancestors(const PosTable& t, std::uint32_t i1,
                                     const std::vector<Ancestor>& a1, std::uint32_t i2,
                                     const std::vector<Ancestor>& a2) const {
  const bool virtual_root = &t == &verb_;
  std::vector<std::uint32_t> common;
  for (const Ancestor& x : a1) {
    for (const Ancestor& y : a2) {
      if (x.index == y.index) common.push_back(x.index);
    }
  }
  if (virtual_root) common.push_back(kVirtualRoot);
  if (common.empty()) throw Error(ErrorKind::NoCommonAncestor, "synsets share no hypernym");

  auto min_depth = [&t](std::uint32_t i) { return i == kVirtualRoot ? 0 : t.min_depth[i]; };
  int deepest = -1;
  for (std::uint32_t c : common) deepest = std::max(deepest, min_depth(c));

  std::uint32_t subsumer = kVirtualRoot;
  bool have = false;
  for (std::uint32_t c : common) {
    if (min_depth(c) != deepest) continue;
    // Either argument wins a tie, so the choice does not depend on argument order.
    if (c == i1 || c == i2) {
      subsumer = c;
      break;
    }
    // The virtual root sorts before every real synset name.
    const bool better = !have || (subsumer != kVirtualRoot &&
                                  (c == kVirtualRoot || t.synsets[c].name < t.synsets[subsumer].name));
    if (better) {
      subsumer = c;
      have = true;
    }
  }

  const int depth = subsumer == kVirtualRoot ? 1 : t.max_depth[subsumer] + 1;
  const int len1 = shortest_distance(t, virtual_root, i1, a1, subsumer) + depth;
  const int len2 = shortest_distance(t, virtual_root, i2, a2, subsumer) + depth;
  return 2.0 * depth / static_cast<double>(len1 + len2);
}

double WordnetDb::wup_similarity(const Synset& s1, const Synset& s2) const {
  if (s1.id.pos != s2.id.pos) {
    throw Error(ErrorKind::NoCommonAncestor, "Wu-Palmer is undefined across parts of speech");
  }
  const PosTable& t = table(s1.id.pos);
  const std::uint32_t i1 = index_of(s1);
  const std::uint32_t i2 = index_of(s2);
  return wup_with_ancestors(t, i1, ancestors(t, i1), i2, ancestors(t, i2));
}

double WordnetDb::word_similarity(std::string_view w1, std::string_view w2) const {
  if (w1 == w2) return 1.0;
  const auto s1 = synsets_of(w1);
  const auto s2 = synsets_of(w2);
  if (s1.empty() || s2.empty()) return 0.0;

  struct Prepared {
    const PosTable* table;
    std::uint32_t index;
    std::vector<Ancestor> ancestors;
  };
  auto prepare = [this](const std::vector<const Synset*>& synsets) {
    std::vector<Prepared> out;
    out.reserve(synsets.size());
    for (const Synset* s : synsets) {
      const PosTable& t = table(s->id.pos);
      const std::uint32_t i = index_of(*s);
      out.push_back({&t, i, ancestors(t, i)});
    }
    return out;
  };
  const auto p1 = prepare(s1);
  const auto p2 = prepare(s2);

  double best = 0.0;
  for (const Prepared& a : p1) {
    for (const Prepared& b : p2) {
      if (a.table != b.table) continue;
      best = std::max(best, wup_with_ancestors(*a.table, a.index, a.ancestors, b.index, b.ancestors));
      if (best == 1.0) return best;
    }
  }
  return best;
}

}  // namespace frsim
