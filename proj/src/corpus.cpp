#include "seqtag/corpus.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "seqtag/error.hpp"
#include "seqtag/textio.hpp"
#include "seqtag/unicode.hpp"

namespace seqtag {

namespace {

bool is_blank(std::string_view line) {
  return textio::trim(line).empty();
}

bool has_ascii_space(std::string_view s) {
  return s.find_first_of(" \t\r\n\v\f") != std::string_view::npos;
}

// Builds the inventory from tags in order of first appearance.
TagInventory infer_inventory(const std::vector<TaggedSentence>& sentences,
                             const std::vector<std::string>& tag_order) {
  (void)sentences;
  return TagInventory::from_tags(tag_order, "inferred");
}

struct CorpusBuilder {
  std::vector<TaggedSentence> sentences;
  std::vector<std::string> tag_order;
  std::unordered_map<std::string, TagId> tag_ids;
  TaggedSentence current;

  TagId intern(const std::string& tag, std::size_t line) {
    auto it = tag_ids.find(tag);
    if (it != tag_ids.end()) return it->second;
    try {
      TagInventory::validate_tag_name(tag);
    } catch (const DataError& e) {
      throw ParseError(e.what(), line);
    }
    TagId id = static_cast<TagId>(tag_order.size());
    tag_order.push_back(tag);
    tag_ids.emplace(tag, id);
    return id;
  }

  void add(std::string token, const std::string& tag, std::size_t line) {
    if (token.empty()) throw ParseError("empty token", line);
    if (has_ascii_space(token))
      throw ParseError("token contains whitespace", line);
    current.tokens.push_back(std::move(token));
    current.tags.push_back(intern(tag, line));
  }

  void end_sentence() {
    if (!current.tokens.empty()) sentences.push_back(std::move(current));
    current = {};
  }

  TaggedCorpus finish() {
    end_sentence();
    if (sentences.empty()) throw DataError("empty corpus: no sentences");
    TaggedCorpus corpus;
    corpus.inventory = infer_inventory(sentences, tag_order);
    corpus.sentences = std::move(sentences);
    return corpus;
  }
};

}  // namespace

// --- TagInventory -----------------------------------------------------------

void TagInventory::validate_tag_name(const std::string& tag) {
  if (tag.empty()) throw DataError("empty tag name");
  if (tag == kStartTag || tag == kEndTag)
    throw DataError("tag name '" + tag + "' is reserved");
  if (tag[0] < 'A' || tag[0] > 'Z')
    throw DataError("tag '" + tag + "' must start with an uppercase letter");
  for (char c : tag) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok)
      throw DataError("tag '" + tag +
                      "' contains a character outside [A-Z0-9-]");
  }
}

TagInventory TagInventory::from_tags(std::vector<std::string> tags,
                                     std::string name) {
  if (tags.empty()) throw DataError("tag inventory must not be empty");
  TagInventory inv;
  inv.name_ = std::move(name);
  for (std::size_t i = 0; i < tags.size(); ++i) {
    validate_tag_name(tags[i]);
    if (inv.ids_.count(tags[i]))
      throw DataError("duplicate tag '" + tags[i] + "' in inventory");
    inv.ids_.emplace(tags[i], static_cast<TagId>(i));
  }
  inv.tags_ = std::move(tags);
  return inv;
}

TagId TagInventory::id_of(const std::string& tag) const {
  auto it = ids_.find(tag);
  return it == ids_.end() ? -1 : it->second;
}

TagId TagInventory::require(const std::string& tag) const {
  TagId id = id_of(tag);
  if (id < 0)
    throw DataError("tag '" + tag + "' not in inventory '" + name_ + "'");
  return id;
}

std::size_t TaggedCorpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

std::string RemapRule::describe() const {
  return source_tag + " " + (suffix.empty() ? "*" : suffix) + " -> " +
         target_tag;
}

std::vector<std::vector<std::size_t>> FoldSpec::fold_indices() const {
  std::vector<std::vector<std::size_t>> folds(k);
  for (std::size_t i = 0; i < assignment.size(); ++i)
    folds[assignment[i]].push_back(i);
  return folds;
}

// --- parsing ----------------------------------------------------------------

TaggedCorpus parse_vertical(std::string_view text) {
  CorpusBuilder b;
  std::vector<std::string> lines = textio::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    std::size_t lineno = li + 1;
    if (is_blank(line)) {
      b.end_sentence();
      continue;
    }
    unicode::decode(line, lineno);  // reject malformed UTF-8 with location
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("expected token<TAB>tag", lineno);
    std::string token = line.substr(0, tab);
    std::string tag(textio::trim(line.substr(tab + 1)));
    if (tag.empty()) throw ParseError("empty tag", lineno);
    b.add(std::move(token), tag, lineno);
  }
  return b.finish();
}

TaggedCorpus parse_slash(std::string_view text) {
  CorpusBuilder b;
  std::vector<std::string> lines = textio::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    std::size_t lineno = li + 1;
    if (is_blank(line)) continue;
    unicode::decode(line, lineno);
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
        ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      std::string item = line.substr(pos, end - pos);
      std::size_t col = pos + 1;
      std::size_t slash = item.rfind('/');
      if (slash == std::string::npos)
        throw ParseError("item '" + item + "' has no '/'", lineno, col);
      std::string word = item.substr(0, slash);
      std::string tag = item.substr(slash + 1);
      if (word.empty()) throw ParseError("empty word in item '" + item + "'",
                                         lineno, col);
      if (tag.empty()) throw ParseError("empty tag in item '" + item + "'",
                                        lineno, col);
      b.add(std::move(word), tag, lineno);
      pos = end;
    }
    b.end_sentence();
  }
  return b.finish();
}

std::string write_vertical(const TaggedCorpus& corpus) {
  std::string out;
  for (const auto& s : corpus.sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += s.tokens[i];
      out += '\t';
      out += corpus.inventory.tag_name(s.tags[i]);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::string write_slash(const TaggedCorpus& corpus) {
  std::string out;
  for (const auto& s : corpus.sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out += ' ';
      out += s.tokens[i];
      out += '/';
      out += corpus.inventory.tag_name(s.tags[i]);
    }
    out += '\n';
  }
  return out;
}

TagInventory parse_tagset(std::string_view text, std::string name) {
  std::vector<std::string> tags;
  std::vector<std::string> lines = textio::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view line = textio::trim(lines[li]);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos)
      line = textio::trim(line.substr(0, hash));
    if (line.empty()) continue;
    tags.emplace_back(line);
  }
  if (tags.empty()) throw DataError("tagset '" + name + "' has no tags");
  try {
    return TagInventory::from_tags(std::move(tags), std::move(name));
  } catch (const DataError& e) {
    throw DataError(std::string("invalid tagset: ") + e.what());
  }
}

std::vector<RemapRule> parse_remap_rules(std::string_view text) {
  std::vector<RemapRule> rules;
  std::vector<std::string> lines = textio::split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view raw = lines[li];
    std::size_t lineno = li + 1;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (is_blank(raw)) continue;
    unicode::decode(raw, lineno);
    std::size_t t1 = raw.find('\t');
    std::size_t t2 = t1 == std::string_view::npos
                         ? std::string_view::npos
                         : raw.find('\t', t1 + 1);
    if (t1 == std::string_view::npos || t2 == std::string_view::npos)
      throw ParseError("expected SOURCE<TAB>suffix-or-*<TAB>TARGET", lineno);
    RemapRule rule;
    rule.source_tag = std::string(textio::trim(raw.substr(0, t1)));
    std::string pat(textio::trim(raw.substr(t1 + 1, t2 - t1 - 1)));
    rule.target_tag = std::string(textio::trim(raw.substr(t2 + 1)));
    if (rule.source_tag.empty() || rule.target_tag.empty() || pat.empty())
      throw ParseError("empty field in remap rule", lineno);
    rule.suffix = (pat == "*") ? std::string() : pat;
    rules.push_back(std::move(rule));
  }
  return rules;
}

// --- operations -------------------------------------------------------------

std::vector<std::vector<std::string>> tokenize_raw(std::string_view text) {
  std::vector<char32_t> cps = unicode::decode(text, 1);
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> sentence;
  std::vector<char32_t> word;

  auto flush_word = [&] {
    if (!word.empty()) {
      sentence.push_back(unicode::encode(word));
      word.clear();
    }
  };
  auto flush_sentence = [&] {
    if (!sentence.empty()) {
      sentences.push_back(std::move(sentence));
      sentence.clear();
    }
  };

  for (char32_t cp : cps) {
    if (unicode::is_ascii_space(cp)) {
      flush_word();
    } else if (cp == unicode::kEthiopicWordspace) {
      flush_word();
    } else if (cp == unicode::kEthiopicComma) {
      flush_word();
      sentence.push_back(unicode::encode(&cp, 1));
    } else if (cp == unicode::kEthiopicFullStop || cp == U'?' || cp == U'!' ||
               cp == U'.') {
      flush_word();
      sentence.push_back(unicode::encode(&cp, 1));
      flush_sentence();
    } else {
      word.push_back(cp);
    }
  }
  flush_word();
  flush_sentence();
  return sentences;
}

TaggedCorpus remap(const TaggedCorpus& corpus,
                   const std::vector<RemapRule>& rules,
                   const TagInventory& target) {
  TaggedCorpus out;
  out.inventory = target;
  out.sentences.reserve(corpus.sentences.size());
  for (const auto& s : corpus.sentences) {
    TaggedSentence ns;
    ns.tokens = s.tokens;
    ns.tags.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string& token = s.tokens[i];
      const std::string& tag = corpus.inventory.tag_name(s.tags[i]);
      const RemapRule* matched = nullptr;
      for (const auto& rule : rules) {
        if (rule.source_tag != tag) continue;
        if (!rule.suffix.empty() && !token.ends_with(rule.suffix)) continue;
        matched = &rule;
        break;
      }
      const std::string& new_tag = matched ? matched->target_tag : tag;
      TagId id = target.id_of(new_tag);
      if (id < 0) {
        std::string rule_desc =
            matched ? matched->describe() : "identity (no rule matched)";
        throw DataError("remap produced tag '" + new_tag +
                        "' outside inventory '" + target.name() +
                        "'; rule: " + rule_desc);
      }
      ns.tags.push_back(id);
    }
    out.sentences.push_back(std::move(ns));
  }
  return out;
}

TaggedCorpus with_inventory(const TaggedCorpus& corpus,
                            const TagInventory& inventory) {
  return remap(corpus, {}, inventory);
}

FoldSpec kfold(const TaggedCorpus& corpus, int k, std::uint64_t seed) {
  std::size_t n = corpus.sentences.size();
  if (k < 2) throw ParamError("kfold: k must be >= 2, got " + std::to_string(k));
  if (static_cast<std::size_t>(k) > n)
    throw ParamError("kfold: k=" + std::to_string(k) + " exceeds sentence count " +
                     std::to_string(n));

  // Explicit Fisher-Yates with a modulo draw: std::shuffle is not
  // specified bit-for-bit across standard libraries, and fold splits
  // must reproduce everywhere for a fixed seed.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 gen(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(gen() % (i + 1));
    std::swap(perm[i], perm[j]);
  }

  FoldSpec spec;
  spec.k = k;
  spec.seed = seed;
  spec.assignment.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    spec.assignment[perm[pos]] = static_cast<int>(pos % k);
  return spec;
}

namespace {
TaggedCorpus select_sentences(const TaggedCorpus& corpus, const FoldSpec& spec,
                              int fold, bool keep_in_fold) {
  if (fold < 0 || fold >= spec.k)
    throw ParamError("fold id " + std::to_string(fold) + " out of range");
  if (spec.assignment.size() != corpus.sentences.size())
    throw ParamError("fold spec does not match corpus size");
  TaggedCorpus out;
  out.inventory = corpus.inventory;
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
    if ((spec.assignment[i] == fold) == keep_in_fold)
      out.sentences.push_back(corpus.sentences[i]);
  }
  return out;
}
}  // namespace

TaggedCorpus fold_test(const TaggedCorpus& corpus, const FoldSpec& spec,
                       int fold) {
  return select_sentences(corpus, spec, fold, true);
}

TaggedCorpus fold_train(const TaggedCorpus& corpus, const FoldSpec& spec,
                        int fold) {
  return select_sentences(corpus, spec, fold, false);
}

KnownUnknownSplit split_known_unknown(const TaggedCorpus& train,
                                      const TaggedCorpus& test) {
  std::unordered_set<std::string> vocab;
  for (const auto& s : train.sentences)
    for (const auto& t : s.tokens) vocab.insert(t);

  KnownUnknownSplit split;
  split.known.reserve(test.sentences.size());
  for (const auto& s : test.sentences) {
    std::vector<char> row(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      bool known = vocab.count(s.tokens[i]) > 0;
      row[i] = known ? 1 : 0;
      if (known)
        ++split.known_count;
      else
        ++split.unknown_count;
    }
    split.known.push_back(std::move(row));
  }
  return split;
}

CorpusStats stats(const TaggedCorpus& corpus) {
  CorpusStats out;
  out.sentence_count = corpus.sentences.size();
  std::vector<std::size_t> counts(corpus.inventory.size(), 0);
  for (const auto& s : corpus.sentences) {
    out.token_count += s.size();
    for (TagId t : s.tags) ++counts[t];
  }
  for (int t = 0; t < corpus.inventory.size(); ++t) {
    if (counts[t] > 0)
      out.tag_counts.emplace_back(corpus.inventory.tag_name(t), counts[t]);
  }
  std::sort(out.tag_counts.begin(), out.tag_counts.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  return out;
}

std::string stats_csv(const CorpusStats& s) {
  std::string out = "tag,count\n";
  for (const auto& [tag, count] : s.tag_counts) {
    out += tag;
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

}  // namespace seqtag
