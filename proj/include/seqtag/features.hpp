#ifndef SEQTAG_FEATURES_HPP
#define SEQTAG_FEATURES_HPP

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqtag/corpus.hpp"

namespace seqtag {

// Key prefixes for the tag-context families; the CRF decoder resolves
// these against hypothesized predecessors.
inline constexpr const char* kPrevTagKey = "t-1=";
inline constexpr const char* kPrev2TagKey = "t-2=";

// Which feature families extract() emits. Defaults follow the toolkit's
// reference configuration: every lexical family on, t-1 on, t-2 off so
// first-order decoding stays exact.
struct FeatureConfig {
  bool use_word = true;
  bool use_first_last = true;
  bool use_hyphen = true;
  bool use_digit_window = true;
  bool use_alnum = true;
  std::array<bool, 3> prefix_lengths = {true, true, true};  // pre1..pre3
  std::array<bool, 3> suffix_lengths = {true, true, true};  // suf1..suf3
  bool use_prev_tag = true;
  bool use_prev2_tag = false;
  int min_count = 1;

  // Throws ParamError when no family is enabled or min_count < 0.
  void validate() const;

  // Flat key=value block used in model files and the CLI config.
  std::string to_kv() const;
  static FeatureConfig from_kv(const std::vector<std::string>& lines,
                               std::size_t first_lineno = 0);

  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

// Emits the enabled feature keys for position i of a sentence, in a
// fixed family order. prev_tag / prev2_tag are tag names or the START
// sentinel. Prefix/suffix values are codepoint slices.
std::vector<std::string> extract(const std::vector<std::string>& tokens,
                                 std::size_t i, const std::string& prev_tag,
                                 const std::string& prev2_tag,
                                 const FeatureConfig& config);

// Sparse feature vocabulary. Built once over a corpus, then frozen:
// lookups of unseen keys return -1 and the size never changes. Ids are
// assigned in lexicographic key order, so two builds over the same
// corpus agree exactly.
class FeatureIndex {
 public:
  FeatureIndex() = default;

  // Extracts features at every gold position (with gold previous tags),
  // keeps keys occurring at least max(1, config.min_count) times and
  // freezes the result.
  static FeatureIndex build(const TaggedCorpus& corpus,
                            const FeatureConfig& config);

  // Rebuilds the lookup table from an id-ordered key list (model load).
  static FeatureIndex from_keys(std::vector<std::string> keys);

  int id_of(const std::string& key) const {
    auto it = ids_.find(key);
    return it == ids_.end() ? -1 : it->second;
  }
  int size() const { return static_cast<int>(keys_.size()); }
  const std::vector<std::string>& keys() const { return keys_; }

 private:
  std::vector<std::string> keys_;  // id -> key
  std::unordered_map<std::string, int> ids_;
};

// Gold-context feature extraction for one corpus position.
std::vector<std::string> extract_gold(const TaggedCorpus& corpus,
                                      const TaggedSentence& sentence,
                                      std::size_t i,
                                      const FeatureConfig& config);

}  // namespace seqtag

#endif  // SEQTAG_FEATURES_HPP
