#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lvrover {

struct TokenizeOptions {
  char delimiter = ' ';
  // Collapse runs of delimiters and trim them at both ends. When false every
  // delimiter ends a token, so "a  b" yields {"a", "", "b"} and "" yields {""}.
  bool collapse = true;
};

// Splits `text` into word tokens. The word count of a hypothesis is the size
// of the returned sequence.
inline std::vector<std::string> tokenize(std::string_view text, const TokenizeOptions& opts = {}) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == opts.delimiter) {
      if (!opts.collapse || i > start) tokens.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return tokens;
}

// Counts tokens without materializing them.
inline std::size_t count_tokens(std::string_view text, const TokenizeOptions& opts = {}) {
  std::size_t n = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == opts.delimiter) {
      if (!opts.collapse || i > start) ++n;
      start = i + 1;
    }
  }
  return n;
}

template <typename Range>
std::string join(const Range& tokens, char delimiter) {
  std::string out;
  bool first = true;
  for (const auto& t : tokens) {
    if (!first) out.push_back(delimiter);
    out += t;
    first = false;
  }
  return out;
}

}  // namespace lvrover
