#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lvrover/error.hpp"

namespace lvrover::utf8 {

// Decodes one scalar value starting at `pos`, advancing `pos` past it.
// Rejects overlong forms, surrogates and values above U+10FFFF.
inline char32_t decode_one(std::string_view s, std::size_t& pos, std::size_t base_offset = 0) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  const std::size_t start = pos;
  const unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3, cp = lead & 0x07, min = 0x10000;
  } else {
    throw DecodeError(base_offset + start, "unexpected lead byte");
  }
  if (start + extra >= s.size()) {
    throw DecodeError(base_offset + start, "truncated sequence");
  }
  for (int k = 1; k <= extra; ++k) {
    const unsigned char c = byte(start + k);
    if ((c & 0xC0) != 0x80) throw DecodeError(base_offset + start + k, "expected continuation byte");
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min) throw DecodeError(base_offset + start, "overlong encoding");
  if (cp >= 0xD800 && cp <= 0xDFFF) throw DecodeError(base_offset + start, "surrogate code point");
  if (cp > 0x10FFFF) throw DecodeError(base_offset + start, "code point out of range");
  pos = start + extra + 1;
  return cp;
}

// Throws DecodeError on the first malformed sequence.
inline void validate(std::string_view s, std::size_t base_offset = 0) {
  std::size_t pos = 0;
  while (pos < s.size()) decode_one(s, pos, base_offset);
}

inline std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) out.push_back(decode_one(s, pos));
  return out;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

inline std::string encode(char32_t cp) {
  std::string out;
  append(out, cp);
  return out;
}

}  // namespace lvrover::utf8
