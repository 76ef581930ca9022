#pragma once

#include <string>
#include <string_view>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "lvrover/error.hpp"
#include "lvrover/utf8.hpp"

namespace lvrover {

enum class UnicodeForm { none, nfc };

// How words are compared against a lexicon. Defaults keep tokens raw apart
// from canonical composition.
struct NormalizationPolicy {
  bool case_fold = false;
  UnicodeForm unicode_form = UnicodeForm::nfc;
  bool strip_surrounding_punctuation = false;

  bool is_identity() const {
    return !case_fold && unicode_form == UnicodeForm::none && !strip_surrounding_punctuation;
  }

  friend bool operator==(const NormalizationPolicy&, const NormalizationPolicy&) = default;
};

namespace detail {

inline bool is_ascii(std::string_view s) {
  for (char c : s) {
    if (static_cast<unsigned char>(c) >= 0x80) return false;
  }
  return true;
}

inline const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) throw ConfigError("ICU NFC normalizer unavailable");
  return *n;
}

inline std::string strip_punctuation(std::string_view s) {
  std::u32string cps = utf8::decode(s);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && u_ispunct(static_cast<UChar32>(cps[b]))) ++b;
  while (e > b && u_ispunct(static_cast<UChar32>(cps[e - 1]))) --e;
  if (b == 0 && e == cps.size()) return std::string(s);
  return utf8::encode(std::u32string_view(cps).substr(b, e - b));
}

}  // namespace detail

// Applies case folding, then canonical composition, then edge punctuation
// stripping. Input must be valid UTF-8. Idempotent for every policy.
inline std::string normalize(std::string_view word, const NormalizationPolicy& policy) {
  if (policy.is_identity()) return std::string(word);

  std::string out;
  if (detail::is_ascii(word)) {
    // NFC and full case folding both reduce to the trivial mapping on ASCII.
    out.assign(word);
    if (policy.case_fold) {
      for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      }
    }
  } else if (!policy.case_fold && policy.unicode_form == UnicodeForm::none) {
    out.assign(word);
  } else {
    icu::UnicodeString u =
        icu::UnicodeString::fromUTF8(icu::StringPiece(word.data(), static_cast<int32_t>(word.size())));
    if (policy.case_fold) u.foldCase();
    if (policy.unicode_form == UnicodeForm::nfc) {
      const icu::Normalizer2& nfc = detail::nfc_instance();
      UErrorCode status = U_ZERO_ERROR;
      if (!nfc.isNormalized(u, status)) {
        status = U_ZERO_ERROR;
        u = nfc.normalize(u, status);
      }
      if (U_FAILURE(status)) throw ConfigError("NFC normalization failed");
    }
    u.toUTF8String(out);
  }
  if (policy.strip_surrounding_punctuation) out = detail::strip_punctuation(out);
  return out;
}

}  // namespace lvrover
