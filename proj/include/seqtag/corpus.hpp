#ifndef SEQTAG_CORPUS_HPP
#define SEQTAG_CORPUS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace seqtag {

using TagId = int;

// Sentinel tag names used by feature extraction and n-gram padding.
// They are reserved: no inventory may contain them as real tags.
inline constexpr const char* kStartTag = "START";
inline constexpr const char* kEndTag = "END";

// Ordered tag list; the position of a tag defines its id. Immutable
// after construction and safe to share across threads.
class TagInventory {
 public:
  TagInventory() = default;

  // Validates names (non-empty, [A-Z][A-Z0-9-]*, not reserved, no
  // duplicates). Throws DataError on violation.
  static TagInventory from_tags(std::vector<std::string> tags,
                                std::string name = "inferred");

  // Throws DataError if the name violates the tag-name rules.
  static void validate_tag_name(const std::string& tag);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& tags() const { return tags_; }
  int size() const { return static_cast<int>(tags_.size()); }
  const std::string& tag_name(TagId id) const { return tags_[id]; }

  // -1 when absent.
  TagId id_of(const std::string& tag) const;
  // Throws DataError when absent.
  TagId require(const std::string& tag) const;
  bool contains(const std::string& tag) const { return id_of(tag) >= 0; }

  friend bool operator==(const TagInventory& a, const TagInventory& b) {
    return a.tags_ == b.tags_;
  }

 private:
  std::string name_;
  std::vector<std::string> tags_;
  std::unordered_map<std::string, TagId> ids_;
};

struct TaggedSentence {
  std::vector<std::string> tokens;
  std::vector<TagId> tags;

  std::size_t size() const { return tokens.size(); }
  friend bool operator==(const TaggedSentence&, const TaggedSentence&) = default;
};

struct TaggedCorpus {
  std::vector<TaggedSentence> sentences;
  TagInventory inventory;

  std::size_t token_count() const;

  friend bool operator==(const TaggedCorpus& a, const TaggedCorpus& b) {
    return a.sentences == b.sentences && a.inventory == b.inventory;
  }
};

// One remap step: (source_tag, token suffix) -> target_tag. An empty
// suffix matches every token carrying source_tag. Rules are ordered;
// the first match wins and unmatched pairs keep their tag.
struct RemapRule {
  std::string source_tag;
  std::string suffix;  // empty = always
  std::string target_tag;

  std::string describe() const;
};

// Sentence-to-fold assignment produced by kfold().
struct FoldSpec {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<int> assignment;  // sentence index -> fold id

  std::vector<std::vector<std::size_t>> fold_indices() const;
};

// Token positions of a test corpus classified against a training
// vocabulary. known[s][i] is true iff test token i of sentence s has a
// surface that occurs anywhere in the training corpus.
struct KnownUnknownSplit {
  std::vector<std::vector<char>> known;
  std::size_t known_count = 0;
  std::size_t unknown_count = 0;
};

struct CorpusStats {
  // Descending by count, ties by tag name; zero-count tags omitted.
  std::vector<std::pair<std::string, std::size_t>> tag_counts;
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
};

// --- file formats ---------------------------------------------------------

// Vertical format: `token<TAB>tag` per line, blank-line sentence
// separator, trailing sentence without a final blank line accepted.
TaggedCorpus parse_vertical(std::string_view text);
std::string write_vertical(const TaggedCorpus& corpus);

// Slash format: one sentence per line, whitespace-separated `word/TAG`
// items; the last '/' in an item separates word from tag.
TaggedCorpus parse_slash(std::string_view text);
std::string write_slash(const TaggedCorpus& corpus);

// Tagset file: one tag per line, '#' comments and blank lines allowed.
TagInventory parse_tagset(std::string_view text, std::string name);

// Remap-rule file: `SOURCE_TAG<TAB>suffix-or-*<TAB>TARGET_TAG` lines.
std::vector<RemapRule> parse_remap_rules(std::string_view text);

// --- operations ------------------------------------------------------------

// Splits raw text into sentences of tokens. Sentences end at '።', '?',
// '!' and '.'; terminators are kept as their own tokens. '፡' separates
// tokens silently, '፣' separates and is kept as a token. Words split on
// ASCII whitespace; empty sentences are dropped.
std::vector<std::vector<std::string>> tokenize_raw(std::string_view text);

// Rewrites every (token, tag) pair by the first matching rule and
// re-binds the corpus to `target`. Token surfaces, sentence count and
// lengths are unchanged. Throws DataError naming the responsible rule
// when a resulting tag is missing from `target`.
TaggedCorpus remap(const TaggedCorpus& corpus,
                   const std::vector<RemapRule>& rules,
                   const TagInventory& target);

// Re-binds a corpus to the given inventory; every used tag must exist
// in it.
TaggedCorpus with_inventory(const TaggedCorpus& corpus,
                            const TagInventory& inventory);

// Shuffles sentence indices with a seeded Fisher-Yates permutation
// (mt19937_64, modulo draw) and deals them round-robin over k folds.
// Throws ParamError when k < 2 or k > sentence count.
FoldSpec kfold(const TaggedCorpus& corpus, int k, std::uint64_t seed);

// Sentences assigned to / excluded from the given fold; the inventory
// is inherited so tag ids stay stable across folds.
TaggedCorpus fold_test(const TaggedCorpus& corpus, const FoldSpec& spec,
                       int fold);
TaggedCorpus fold_train(const TaggedCorpus& corpus, const FoldSpec& spec,
                        int fold);

KnownUnknownSplit split_known_unknown(const TaggedCorpus& train,
                                      const TaggedCorpus& test);

CorpusStats stats(const TaggedCorpus& corpus);

// CSV with a `tag,count` header, rows in stats order.
std::string stats_csv(const CorpusStats& s);

}  // namespace seqtag

#endif  // SEQTAG_CORPUS_HPP
