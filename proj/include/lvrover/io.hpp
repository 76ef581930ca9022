#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lvrover/alignment.hpp"
#include "lvrover/error.hpp"
#include "lvrover/rover.hpp"
#include "lvrover/utf8.hpp"
#include "lvrover/voting.hpp"

#ifndef LVROVER_VERSION
#define LVROVER_VERSION "0.1.0"
#endif

namespace lvrover::io {

using json = nlohmann::json;

struct LineHypotheses {
  std::string line_id;
  std::vector<Hypothesis> hypotheses;
};

namespace detail {

inline bool starts_with_object(std::string_view buf) {
  std::size_t i = 0;
  if (buf.size() >= 3 && buf.compare(0, 3, "\xEF\xBB\xBF") == 0) i = 3;
  while (i < buf.size() && (buf[i] == ' ' || buf[i] == '\t' || buf[i] == '\r' || buf[i] == '\n')) ++i;
  return i < buf.size() && buf[i] == '{';
}

// Splits on LF, dropping a trailing CR and a leading BOM. Returns (line, byte offset) pairs.
inline std::vector<std::pair<std::string_view, std::size_t>> split_lines(std::string_view buf) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t pos = 0;
  if (buf.size() >= 3 && buf.compare(0, 3, "\xEF\xBB\xBF") == 0) pos = 3;
  while (pos < buf.size()) {
    std::size_t eol = buf.find('\n', pos);
    if (eol == std::string_view::npos) eol = buf.size();
    std::string_view line = buf.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.emplace_back(line, pos);
    pos = eol + 1;
  }
  return out;
}

inline bool is_blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

inline std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline json parse_record(std::string_view line, std::size_t line_no) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw InputError("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
  }
}

}  // namespace detail

// JSONL ({"line_id": ..., "hypotheses": [...]}) or blank-line separated plain
// text blocks, one hypothesis per line. Manifest records are skipped.
inline std::vector<LineHypotheses> read_hypotheses(std::istream& in) {
  const std::string buf = detail::slurp(in);
  std::vector<LineHypotheses> out;
  const auto lines = detail::split_lines(buf);

  if (detail::starts_with_object(buf)) {
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const auto [line, offset] = lines[k];
      if (detail::is_blank(line)) continue;
      json rec = detail::parse_record(line, k + 1);
      if (!rec.is_object()) throw InputError("line " + std::to_string(k + 1) + ": expected a JSON object");
      if (rec.contains("manifest")) continue;
      if (!rec.contains("line_id") || !rec["line_id"].is_string())
        throw InputError("line " + std::to_string(k + 1) + ": missing string field 'line_id'");
      LineHypotheses lh{rec["line_id"].get<std::string>(), {}};
      if (!rec.contains("hypotheses") || !rec["hypotheses"].is_array())
        throw InputError("line_id " + lh.line_id + ": missing array field 'hypotheses'");
      for (const auto& h : rec["hypotheses"]) {
        if (!h.is_string()) throw InputError("line_id " + lh.line_id + ": hypotheses must be strings");
        lh.hypotheses.push_back({h.get<std::string>(), std::to_string(lh.hypotheses.size())});
      }
      out.push_back(std::move(lh));
    }
    return out;
  }

  LineHypotheses block;
  auto flush = [&] {
    if (!block.hypotheses.empty()) {
      block.line_id = std::to_string(out.size());
      out.push_back(std::move(block));
      block = {};
    }
  };
  for (const auto& [line, offset] : lines) {
    if (line.empty()) {
      flush();
      continue;
    }
    utf8::validate(line, offset);
    block.hypotheses.push_back({std::string(line), std::to_string(block.hypotheses.size())});
  }
  flush();
  return out;
}

// Plain lines (CR and BOM stripped, UTF-8 validated). A final empty line left
// by a trailing newline is not reported.
inline std::vector<std::string> read_lines(std::istream& in) {
  const std::string buf = detail::slurp(in);
  std::vector<std::string> out;
  for (const auto& [line, offset] : detail::split_lines(buf)) {
    utf8::validate(line, offset);
    out.emplace_back(line);
  }
  return out;
}

struct TextRecord {
  std::optional<std::string> line_id;
  std::string text;
};

// Reads either plain text lines or JSONL records carrying a "text" field
// (such as combine output).
inline std::vector<TextRecord> read_text_records(std::istream& in) {
  const std::string buf = detail::slurp(in);
  std::vector<TextRecord> out;
  const auto lines = detail::split_lines(buf);
  if (detail::starts_with_object(buf)) {
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (detail::is_blank(lines[k].first)) continue;
      json rec = detail::parse_record(lines[k].first, k + 1);
      if (!rec.is_object()) throw InputError("line " + std::to_string(k + 1) + ": expected a JSON object");
      if (rec.contains("manifest")) continue;
      if (!rec.contains("text") || !rec["text"].is_string())
        throw InputError("line " + std::to_string(k + 1) + ": missing string field 'text'");
      TextRecord r{std::nullopt, rec["text"].get<std::string>()};
      if (rec.contains("line_id") && rec["line_id"].is_string()) r.line_id = rec["line_id"].get<std::string>();
      out.push_back(std::move(r));
    }
    return out;
  }
  for (const auto& [line, offset] : lines) {
    utf8::validate(line, offset);
    out.push_back({std::nullopt, std::string(line)});
  }
  return out;
}

inline json to_json(std::string_view line_id, const CombinationResult& r) {
  return json{{"line_id", line_id},
              {"text", r.text},
              {"nb_words", r.tokens.size()},
              {"verified_count", r.verified_count},
              {"direction", to_string(r.direction)},
              {"fallback_events", r.fallback_events}};
}

// Same schema as combine output; fields without meaning for ROVER are null.
inline json to_json(std::string_view line_id, const RoverResult& r) {
  return json{{"line_id", line_id},         {"text", r.text},          {"nb_words", r.tokens.size()},
              {"verified_count", nullptr},  {"direction", nullptr},    {"fallback_events", nullptr}};
}

// FNV-1a 64 over the file bytes, as "fnv1a64:<hex>".
inline std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::uint64_t h = 0xCBF29CE484222325ULL;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001B3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex;
}

// Everything that determines a command's output. Thread count is excluded
// since it never changes the output.
struct RunManifest {
  explicit RunManifest(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  json parameters = json::object();
  std::map<std::string, std::string> input_digests;
  std::string tool_version = LVROVER_VERSION;

  void add_input(const std::string& role, const std::string& path) { input_digests[role] = file_digest(path); }

  json to_json() const {
    return json{{"command", command}, {"parameters", parameters}, {"inputs", input_digests},
                {"tool", "lvrover " + tool_version}};
  }
};

}  // namespace lvrover::io
