#include "seqtag/features.hpp"

#include <algorithm>
#include <map>

#include "seqtag/error.hpp"
#include "seqtag/textio.hpp"
#include "seqtag/unicode.hpp"

namespace seqtag {

namespace {

bool all_digits(const std::vector<char32_t>& cps) {
  if (cps.empty()) return false;
  for (char32_t cp : cps)
    if (!unicode::is_digit(cp)) return false;
  return true;
}

bool all_alnum(const std::vector<char32_t>& cps) {
  if (cps.empty()) return false;
  for (char32_t cp : cps)
    if (!unicode::is_alnum(cp)) return false;
  return true;
}

bool contains_hyphen(const std::vector<char32_t>& cps) {
  for (char32_t cp : cps)
    if (cp == U'-') return true;
  return false;
}

std::string lengths_to_csv(const std::array<bool, 3>& lens) {
  std::string out;
  for (int n = 1; n <= 3; ++n) {
    if (!lens[n - 1]) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(n);
  }
  return out.empty() ? "none" : out;
}

std::array<bool, 3> lengths_from_csv(const std::string& s, std::size_t line) {
  std::array<bool, 3> lens = {false, false, false};
  if (s == "none" || s.empty()) return lens;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos
                                         ? std::string::npos
                                         : comma - pos);
    long long n = textio::parse_int(item, line);
    if (n < 1 || n > 3)
      throw ParseError("prefix/suffix length must be 1..3, got " + item, line);
    lens[n - 1] = true;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return lens;
}

bool parse_bool(const std::string& v, std::size_t line) {
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  throw ParseError("expected boolean 0/1, got '" + v + "'", line);
}

}  // namespace

void FeatureConfig::validate() const {
  if (min_count < 0) throw ParamError("min_count must be non-negative");
  bool any = use_word || use_first_last || use_hyphen || use_digit_window ||
             use_alnum || use_prev_tag || use_prev2_tag;
  for (bool b : prefix_lengths) any = any || b;
  for (bool b : suffix_lengths) any = any || b;
  if (!any) throw ParamError("feature config enables no feature family");
}

std::string FeatureConfig::to_kv() const {
  std::string out;
  auto emit = [&](const char* key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  emit("use_word", use_word ? "1" : "0");
  emit("use_first_last", use_first_last ? "1" : "0");
  emit("use_hyphen", use_hyphen ? "1" : "0");
  emit("use_digit_window", use_digit_window ? "1" : "0");
  emit("use_alnum", use_alnum ? "1" : "0");
  emit("prefix_lengths", lengths_to_csv(prefix_lengths));
  emit("suffix_lengths", lengths_to_csv(suffix_lengths));
  emit("use_prev_tag", use_prev_tag ? "1" : "0");
  emit("use_prev2_tag", use_prev2_tag ? "1" : "0");
  emit("min_count", std::to_string(min_count));
  return out;
}

FeatureConfig FeatureConfig::from_kv(const std::vector<std::string>& lines,
                                     std::size_t first_lineno) {
  FeatureConfig cfg;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t lineno = first_lineno + i;
    std::string_view line = textio::trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    auto [key, value] = textio::split_kv(line, lineno);
    if (key == "use_word")
      cfg.use_word = parse_bool(value, lineno);
    else if (key == "use_first_last")
      cfg.use_first_last = parse_bool(value, lineno);
    else if (key == "use_hyphen")
      cfg.use_hyphen = parse_bool(value, lineno);
    else if (key == "use_digit_window")
      cfg.use_digit_window = parse_bool(value, lineno);
    else if (key == "use_alnum")
      cfg.use_alnum = parse_bool(value, lineno);
    else if (key == "prefix_lengths")
      cfg.prefix_lengths = lengths_from_csv(value, lineno);
    else if (key == "suffix_lengths")
      cfg.suffix_lengths = lengths_from_csv(value, lineno);
    else if (key == "use_prev_tag")
      cfg.use_prev_tag = parse_bool(value, lineno);
    else if (key == "use_prev2_tag")
      cfg.use_prev2_tag = parse_bool(value, lineno);
    else if (key == "min_count")
      cfg.min_count = static_cast<int>(textio::parse_int(value, lineno));
    else
      throw ParseError("unknown feature-config key '" + key + "'", lineno);
  }
  cfg.validate();
  return cfg;
}

std::vector<std::string> extract(const std::vector<std::string>& tokens,
                                 std::size_t i, const std::string& prev_tag,
                                 const std::string& prev2_tag,
                                 const FeatureConfig& config) {
  if (i >= tokens.size())
    throw ParamError("extract: position " + std::to_string(i) +
                     " out of range for sentence of length " +
                     std::to_string(tokens.size()));

  const std::string& word = tokens[i];
  std::vector<char32_t> cps = unicode::decode(word);

  std::vector<std::string> keys;
  keys.reserve(16);

  if (config.use_word) keys.push_back("w0=" + word);
  if (config.use_first_last) {
    if (i == 0) keys.push_back("first=1");
    if (i + 1 == tokens.size()) keys.push_back("last=1");
  }
  if (config.use_hyphen && contains_hyphen(cps)) keys.push_back("hyphen=1");
  if (config.use_digit_window) {
    if (i > 0 && all_digits(unicode::decode(tokens[i - 1])))
      keys.push_back("digit-1=1");
    if (all_digits(cps)) keys.push_back("digit0=1");
    if (i + 1 < tokens.size() && all_digits(unicode::decode(tokens[i + 1])))
      keys.push_back("digit+1=1");
  }
  if (config.use_alnum && all_alnum(cps)) keys.push_back("alnum=1");
  for (int n = 1; n <= 3; ++n) {
    if (config.prefix_lengths[n - 1] && cps.size() >= static_cast<std::size_t>(n))
      keys.push_back("pre" + std::to_string(n) + "=" +
                     unicode::encode(cps.data(), n));
  }
  for (int n = 1; n <= 3; ++n) {
    if (config.suffix_lengths[n - 1] && cps.size() >= static_cast<std::size_t>(n))
      keys.push_back("suf" + std::to_string(n) + "=" +
                     unicode::encode(cps.data() + cps.size() - n, n));
  }
  if (config.use_prev_tag) keys.push_back(kPrevTagKey + prev_tag);
  if (config.use_prev2_tag) keys.push_back(kPrev2TagKey + prev2_tag);
  return keys;
}

std::vector<std::string> extract_gold(const TaggedCorpus& corpus,
                                      const TaggedSentence& sentence,
                                      std::size_t i,
                                      const FeatureConfig& config) {
  const std::string prev =
      i >= 1 ? corpus.inventory.tag_name(sentence.tags[i - 1]) : kStartTag;
  const std::string prev2 =
      i >= 2 ? corpus.inventory.tag_name(sentence.tags[i - 2]) : kStartTag;
  return extract(sentence.tokens, i, prev, prev2, config);
}

FeatureIndex FeatureIndex::build(const TaggedCorpus& corpus,
                                 const FeatureConfig& config) {
  config.validate();
  // std::map keeps keys lexicographically sorted, which defines the ids.
  std::map<std::string, std::size_t> counts;
  for (const auto& sentence : corpus.sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      for (auto& key : extract_gold(corpus, sentence, i, config))
        ++counts[key];
    }
  }
  std::size_t cutoff = std::max(1, config.min_count);
  FeatureIndex index;
  for (const auto& [key, count] : counts) {
    if (count < cutoff) continue;
    index.ids_.emplace(key, static_cast<int>(index.keys_.size()));
    index.keys_.push_back(key);
  }
  return index;
}

FeatureIndex FeatureIndex::from_keys(std::vector<std::string> keys) {
  FeatureIndex index;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, fresh] = index.ids_.emplace(keys[i], static_cast<int>(i));
    if (!fresh) throw DataError("duplicate feature key '" + keys[i] + "'");
  }
  index.keys_ = std::move(keys);
  return index;
}

}  // namespace seqtag
