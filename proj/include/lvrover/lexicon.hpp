#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lvrover/error.hpp"
#include "lvrover/normalize.hpp"
#include "lvrover/tokenize.hpp"
#include "lvrover/utf8.hpp"

namespace lvrover {

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

inline bool has_whitespace(std::string_view s, char delimiter) {
  for (char c : s) {
    if (c == delimiter || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') return true;
  }
  return false;
}

}  // namespace detail

// A set of normalized word forms with O(1) expected membership queries.
// Safe for concurrent readers once built.
class Lexicon {
 public:
  using WordSet = std::unordered_set<std::string, detail::StringHash, std::equal_to<>>;

  Lexicon() = default;
  explicit Lexicon(NormalizationPolicy policy) : policy_(policy) {}

  template <typename Range>
  static Lexicon from_words(const Range& words, NormalizationPolicy policy = {}) {
    Lexicon lex(policy);
    for (const auto& w : words) lex.insert(w);
    return lex;
  }

  static Lexicon from_words(std::initializer_list<std::string_view> words, NormalizationPolicy policy = {}) {
    return from_words<std::initializer_list<std::string_view>>(words, policy);
  }

  const NormalizationPolicy& policy() const noexcept { return policy_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const WordSet& words() const noexcept { return words_; }

  void reserve(std::size_t n) { words_.reserve(n); }

  // Normalizes and stores `word`. Returns false when it was already present.
  // Words with whitespace, or empty after normalization, are rejected.
  bool insert(std::string_view word) {
    if (detail::has_whitespace(word, ' ')) throw InputError("lexicon word contains whitespace: '" + std::string(word) + "'");
    std::string norm = normalize(word, policy_);
    if (norm.empty()) throw InputError("lexicon word is empty after normalization");
    return words_.insert(std::move(norm)).second;
  }

  bool contains(std::string_view word) const {
    if (words_.empty()) return false;
    if (policy_.is_identity() || (!policy_.case_fold && !policy_.strip_surrounding_punctuation &&
                                  detail::is_ascii(word))) {
      return words_.find(word) != words_.end();
    }
    return words_.find(normalize(word, policy_)) != words_.end();
  }

 private:
  NormalizationPolicy policy_{};
  WordSet words_;
};

struct LexiconWarning {
  std::size_t line = 0;  // 1-based
  std::string message;
};

// Reads one word per line (LF or CRLF, optional UTF-8 BOM). Blank lines are
// ignored; lines containing whitespace or the delimiter are skipped with a
// warning. Malformed UTF-8 throws DecodeError with the absolute byte offset.
inline Lexicon load_lexicon(std::istream& in, const NormalizationPolicy& policy = {}, char delimiter = ' ',
                            std::vector<LexiconWarning>* warnings = nullptr) {
  std::string buf{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::size_t pos = 0;
  if (buf.size() >= 3 && buf.compare(0, 3, "\xEF\xBB\xBF") == 0) pos = 3;
  utf8::validate(std::string_view(buf).substr(pos), pos);

  Lexicon lex(policy);
  lex.reserve(buf.size() / 8);
  std::size_t line_no = 0;
  const std::string_view all(buf);
  while (pos < all.size()) {
    std::size_t eol = all.find('\n', pos);
    if (eol == std::string_view::npos) eol = all.size();
    std::string_view line = all.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (detail::has_whitespace(line, delimiter)) {
      if (warnings) warnings->push_back({line_no, "word contains whitespace or delimiter; skipped"});
      continue;
    }
    std::string norm = normalize(line, policy);
    if (norm.empty()) {
      if (warnings) warnings->push_back({line_no, "word is empty after normalization; skipped"});
      continue;
    }
    lex.insert(norm);
  }
  return lex;
}

inline Lexicon merge(const Lexicon& a, const Lexicon& b) {
  if (!(a.policy() == b.policy())) throw ConfigError("cannot merge lexicons with different normalization policies");
  Lexicon out(a.policy());
  out.reserve(a.size() + b.size());
  for (const auto& w : a.words()) out.insert(w);
  for (const auto& w : b.words()) out.insert(w);
  return out;
}

// Fraction of reference word tokens (with multiplicity) found in `lex`.
inline double coverage(const Lexicon& lex, std::span<const std::string> reference_lines,
                       const TokenizeOptions& opts = {}) {
  std::size_t total = 0;
  std::size_t hits = 0;
  for (const auto& line : reference_lines) {
    for (const auto& tok : tokenize(line, opts)) {
      ++total;
      if (lex.contains(tok)) ++hits;
    }
  }
  if (total == 0) throw UndefinedRateError("coverage undefined: reference has no word tokens");
  return static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace lvrover
