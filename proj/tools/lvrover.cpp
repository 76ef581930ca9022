// lvrover: combine, score and simulate raw recognizer outputs.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lvrover/bench.hpp"
#include "lvrover/cohort.hpp"
#include "lvrover/io.hpp"
#include "lvrover/lexicon.hpp"
#include "lvrover/metrics.hpp"
#include "lvrover/parallel.hpp"
#include "lvrover/pipeline.hpp"
#include "lvrover/rover.hpp"
#include "lvrover/voting.hpp"

namespace {

using lvrover::io::json;

struct Common {
  std::size_t threads = 0;
  std::string out;
  bool no_manifest = false;

  std::size_t resolved_threads() const {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("LVROVER_THREADS")) {
      try {
        const long v = std::stol(env);
        if (v > 0) return static_cast<std::size_t>(v);
      } catch (const std::exception&) {
      }
      throw lvrover::ConfigError(std::string("LVROVER_THREADS must be a positive integer, got '") + env + "'");
    }
    return 1;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "Worker threads (default: $LVROVER_THREADS or 1)");
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  cmd->add_flag("--no-manifest", c.no_manifest, "Omit the run manifest header");
}

struct TokenArgs {
  std::string delimiter = " ";
  bool no_collapse = false;

  lvrover::TokenizeOptions resolve() const {
    if (delimiter.size() != 1) throw lvrover::ConfigError("--delimiter must be a single byte character");
    return {delimiter[0], !no_collapse};
  }
  void record(json& params) const {
    params["delimiter"] = delimiter;
    params["collapse"] = !no_collapse;
  }
};

void add_token_args(CLI::App* cmd, TokenArgs& t) {
  cmd->add_option("--delimiter", t.delimiter, "Word delimiter character")->capture_default_str();
  cmd->add_flag("--no-collapse", t.no_collapse, "Keep empty words between consecutive delimiters");
}

struct LexiconArgs {
  std::vector<std::string> paths;
  bool case_fold = false;
  bool no_unicode_normalize = false;
  bool strip_punctuation = false;

  lvrover::NormalizationPolicy policy() const {
    lvrover::NormalizationPolicy p;
    p.case_fold = case_fold;
    p.unicode_form = no_unicode_normalize ? lvrover::UnicodeForm::none : lvrover::UnicodeForm::nfc;
    p.strip_surrounding_punctuation = strip_punctuation;
    return p;
  }

  void record(json& params) const {
    params["lexicons"] = paths;
    params["case_fold"] = case_fold;
    params["unicode_normalize"] = !no_unicode_normalize;
    params["strip_punctuation"] = strip_punctuation;
  }

  // Loads one lexicon per path.
  std::vector<lvrover::Lexicon> load_each(char delimiter, lvrover::io::RunManifest& manifest) const {
    std::vector<lvrover::Lexicon> out;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      std::ifstream in(paths[i], std::ios::binary);
      if (!in) throw lvrover::InputError("cannot open lexicon " + paths[i]);
      std::vector<lvrover::LexiconWarning> warnings;
      try {
        out.push_back(lvrover::load_lexicon(in, policy(), delimiter, &warnings));
      } catch (const lvrover::DecodeError& e) {
        throw lvrover::InputError(paths[i] + ": " + e.what());
      }
      for (const auto& w : warnings) std::cerr << "lvrover: warning: " << paths[i] << ":" << w.line << ": " << w.message << "\n";
      manifest.add_input("lexicon[" + std::to_string(i) + "]", paths[i]);
    }
    return out;
  }

  // Loads and merges every path.
  lvrover::Lexicon load_merged(char delimiter, lvrover::io::RunManifest& manifest) const {
    lvrover::Lexicon merged(policy());
    for (auto& lex : load_each(delimiter, manifest)) merged = lvrover::merge(merged, lex);
    return merged;
  }
};

void add_lexicon_args(CLI::App* cmd, LexiconArgs& l) {
  cmd->add_option("--lexicon", l.paths, "Lexicon file, one word per line (repeatable; repeats are merged)");
  cmd->add_flag("--case-fold", l.case_fold, "Case-insensitive lexicon matching");
  cmd->add_flag("--no-unicode-normalize", l.no_unicode_normalize, "Disable NFC normalization of words");
  cmd->add_flag("--strip-punctuation", l.strip_punctuation, "Ignore leading/trailing punctuation when matching");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lvrover::InputError("cannot open " + path);
  return in;
}

// Writes the whole output at once, so a failed run never leaves partial output.
void emit(const Common& c, const std::string& body) {
  if (c.out.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(c.out, std::ios::binary | std::ios::trunc);
  if (!out) throw lvrover::InputError("cannot write " + c.out);
  out << body;
  if (!out) throw lvrover::InputError("write failed for " + c.out);
}

std::string manifest_line(const Common& c, const lvrover::io::RunManifest& m) {
  if (c.no_manifest) return {};
  return json{{"manifest", m.to_json()}}.dump() + "\n";
}

std::string manifest_comment(const Common& c, const lvrover::io::RunManifest& m) {
  if (c.no_manifest) return {};
  return "# manifest " + m.to_json().dump() + "\n";
}

void require_hypotheses(const lvrover::io::LineHypotheses& line) {
  if (line.hypotheses.empty()) throw lvrover::InputError("line_id " + line.line_id + ": empty hypothesis pool");
}

// ---------------------------------------------------------------------------

struct CombineArgs {
  Common common;
  TokenArgs tokens;
  LexiconArgs lexicon;
  std::string hypotheses;
  bool forward_only = false;
};

int cmd_combine(const CombineArgs& a) {
  lvrover::io::RunManifest manifest{"combine"};
  lvrover::CombineOptions opts{a.tokens.resolve(), a.forward_only};
  a.tokens.record(manifest.parameters);
  a.lexicon.record(manifest.parameters);
  manifest.parameters["forward_only"] = a.forward_only;
  manifest.add_input("hypotheses", a.hypotheses);
  const lvrover::Lexicon lex = a.lexicon.load_merged(opts.tokenize.delimiter, manifest);

  auto in = open_input(a.hypotheses);
  const auto lines = lvrover::io::read_hypotheses(in);
  for (const auto& l : lines) require_hypotheses(l);
  const auto results = lvrover::parallel_map(lines.size(), a.common.resolved_threads(), [&](std::size_t i) {
    return lvrover::combine(lines[i].hypotheses, lex, opts);
  });

  std::string body = manifest_line(a.common, manifest);
  for (std::size_t i = 0; i < lines.size(); ++i) body += lvrover::io::to_json(lines[i].line_id, results[i]).dump() + "\n";
  emit(a.common, body);
  return 0;
}

struct RoverArgs {
  Common common;
  TokenArgs tokens;
  std::string hypotheses;
  std::string reference = "first";
};

int cmd_rover(const RoverArgs& a) {
  lvrover::io::RunManifest manifest{"rover"};
  lvrover::RoverOptions opts;
  opts.tokenize = a.tokens.resolve();
  opts.reference = a.reference == "longest" ? lvrover::ReferencePolicy::longest : lvrover::ReferencePolicy::first;
  a.tokens.record(manifest.parameters);
  manifest.parameters["reference"] = a.reference;
  manifest.add_input("hypotheses", a.hypotheses);

  auto in = open_input(a.hypotheses);
  const auto lines = lvrover::io::read_hypotheses(in);
  for (const auto& l : lines) require_hypotheses(l);
  const auto results = lvrover::parallel_map(lines.size(), a.common.resolved_threads(), [&](std::size_t i) {
    return lvrover::rover_combine(lines[i].hypotheses, opts);
  });

  std::string body = manifest_line(a.common, manifest);
  for (std::size_t i = 0; i < lines.size(); ++i) body += lvrover::io::to_json(lines[i].line_id, results[i]).dump() + "\n";
  emit(a.common, body);
  return 0;
}

struct EvalArgs {
  Common common;
  TokenArgs tokens;
  std::string ref;
  std::string hyp;
  bool per_line = false;
  std::string csv;
  std::string format = "json";
};

int cmd_eval(const EvalArgs& a) {
  lvrover::io::RunManifest manifest{"eval"};
  const auto topts = a.tokens.resolve();
  a.tokens.record(manifest.parameters);
  manifest.parameters["per_line"] = a.per_line;
  manifest.add_input("ref", a.ref);
  manifest.add_input("hyp", a.hyp);

  auto rin = open_input(a.ref);
  auto hin = open_input(a.hyp);
  const auto refs = lvrover::io::read_text_records(rin);
  const auto hyps = lvrover::io::read_text_records(hin);
  if (refs.size() != hyps.size())
    throw lvrover::InputError("reference has " + std::to_string(refs.size()) + " lines but hypothesis has " +
                              std::to_string(hyps.size()));
  std::vector<lvrover::LinePair> pairs;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (refs[i].line_id && hyps[i].line_id && *refs[i].line_id != *hyps[i].line_id)
      throw lvrover::InputError("line " + std::to_string(i + 1) + ": line_id mismatch (" + *refs[i].line_id +
                                " vs " + *hyps[i].line_id + ")");
    ids.push_back(refs[i].line_id ? *refs[i].line_id : hyps[i].line_id ? *hyps[i].line_id : std::to_string(i));
    pairs.emplace_back(refs[i].text, hyps[i].text);
  }
  const auto report = lvrover::corpus_eval(pairs, true, topts);

  if (!a.csv.empty()) {
    std::ostringstream os;
    os << manifest_comment(a.common, manifest);
    os << "line_id,ref_chars,char_edits,cer,ref_words,word_edits,wer\n";
    auto rate = [](std::size_t e, std::size_t n) { return n == 0 ? std::string() : std::to_string(double(e) / double(n)); };
    if (a.per_line) {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& c = (*report.per_line)[i];
        os << ids[i] << ',' << c.ref_chars << ',' << c.char_edits << ',' << rate(c.char_edits, c.ref_chars) << ','
           << c.ref_words << ',' << c.word_edits << ',' << rate(c.word_edits, c.ref_words) << '\n';
      }
    }
    os << "TOTAL," << report.total_ref_chars << ',' << report.char_edits << ',' << report.cer << ','
       << report.total_ref_words << ',' << report.word_edits << ',' << report.wer << '\n';
    std::ofstream out(a.csv, std::ios::binary | std::ios::trunc);
    if (!out) throw lvrover::InputError("cannot write " + a.csv);
    out << os.str();
  }

  std::string body;
  if (a.format == "table") {
    std::ostringstream os;
    char buf[256];
    if (a.per_line) {
      std::snprintf(buf, sizeof buf, "%-16s %8s %8s %8s %8s\n", "line_id", "chars", "CER%", "words", "WER%");
      os << buf;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& c = (*report.per_line)[i];
        std::snprintf(buf, sizeof buf, "%-16s %8zu %8.2f %8zu %8.2f\n", ids[i].c_str(), c.ref_chars,
                      c.ref_chars ? 100.0 * double(c.char_edits) / double(c.ref_chars) : 0.0, c.ref_words,
                      c.ref_words ? 100.0 * double(c.word_edits) / double(c.ref_words) : 0.0);
        os << buf;
      }
    }
    std::snprintf(buf, sizeof buf, "lines %zu  CER %.2f%% (%zu/%zu)  WER %.2f%% (%zu/%zu)\n", pairs.size(),
                  100.0 * report.cer, report.char_edits, report.total_ref_chars, 100.0 * report.wer,
                  report.word_edits, report.total_ref_words);
    os << buf;
    body = os.str();
  } else {
    json j{{"lines", pairs.size()},
           {"total_ref_chars", report.total_ref_chars},
           {"total_ref_words", report.total_ref_words},
           {"char_edits", report.char_edits},
           {"word_edits", report.word_edits},
           {"cer", report.cer},
           {"wer", report.wer}};
    if (a.per_line) {
      json rows = json::array();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& c = (*report.per_line)[i];
        rows.push_back({{"line_id", ids[i]},
                        {"ref_chars", c.ref_chars},
                        {"char_edits", c.char_edits},
                        {"ref_words", c.ref_words},
                        {"word_edits", c.word_edits}});
      }
      j["per_line"] = std::move(rows);
    }
    if (!a.common.no_manifest) j["manifest"] = manifest.to_json();
    body = j.dump(2) + "\n";
  }
  emit(a.common, body);
  return 0;
}

struct ChannelArgs {
  double sub_rate = 0.0, ins_rate = 0.0, del_rate = 0.0, space_ins = 0.0, space_del = 0.0;
  double target_cer = -1.0;
  bool rates_given = false;
  double jitter = 0.3;
  double confusion_strength = 0.5;
  std::size_t size = 100;
  std::uint64_t seed = 1;

  lvrover::CohortConfig resolve(char delimiter) const {
    lvrover::CohortConfig cfg;
    cfg.size = size;
    if (!rates_given && target_cer >= 0.0) {
      cfg.base = lvrover::channel_for_target_cer(target_cer);
    } else {
      cfg.base.sub_rate = sub_rate;
      cfg.base.ins_rate = ins_rate;
      cfg.base.del_rate = del_rate;
      cfg.base.space_ins_rate = space_ins;
      cfg.base.space_del_rate = space_del;
    }
    cfg.jitter = jitter;
    cfg.confusion_strength = confusion_strength;
    cfg.master_seed = seed;
    cfg.shared_confusion_seed = lvrover::derive_seed(seed, {0x5EED});
    cfg.delimiter = delimiter;
    return cfg;
  }

  void record(json& params, const lvrover::CohortConfig& cfg) const {
    params["size"] = cfg.size;
    params["sub_rate"] = cfg.base.sub_rate;
    params["ins_rate"] = cfg.base.ins_rate;
    params["del_rate"] = cfg.base.del_rate;
    params["space_ins_rate"] = cfg.base.space_ins_rate;
    params["space_del_rate"] = cfg.base.space_del_rate;
    params["jitter"] = cfg.jitter;
    params["confusion_strength"] = cfg.confusion_strength;
    params["seed"] = seed;
  }
};

// Explicit rates take precedence over --target-cer and cannot be combined with it.
void add_channel_args(CLI::App* cmd, ChannelArgs& c) {
  cmd->add_option("--size", c.size, "Number of simulated recognizers")->capture_default_str();
  auto* target = cmd->add_option("--target-cer", c.target_cer, "Derive all rates from a target single-recognizer CER");
  for (auto* opt : {cmd->add_option("--sub-rate", c.sub_rate, "Per-character substitution probability"),
                    cmd->add_option("--ins-rate", c.ins_rate, "Per-character insertion probability"),
                    cmd->add_option("--del-rate", c.del_rate, "Per-character deletion probability"),
                    cmd->add_option("--space-ins", c.space_ins, "Probability of splitting a word after a character"),
                    cmd->add_option("--space-del", c.space_del, "Probability of dropping a word delimiter")}) {
    opt->excludes(target);
    opt->each([&c](const std::string&) { c.rates_given = true; });
  }
  cmd->add_option("--jitter", c.jitter, "Relative per-recognizer spread of the rates")->capture_default_str();
  cmd->add_option("--confusion-strength", c.confusion_strength, "Probability a substitution uses the shared confusion")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "Master seed")->capture_default_str();
}

struct SimulateArgs {
  Common common;
  TokenArgs tokens;
  ChannelArgs channel;
  std::string truth;
};

int cmd_simulate(const SimulateArgs& a) {
  lvrover::io::RunManifest manifest{"simulate"};
  const auto topts = a.tokens.resolve();
  const auto cfg = a.channel.resolve(topts.delimiter);
  a.tokens.record(manifest.parameters);
  a.channel.record(manifest.parameters, cfg);
  manifest.add_input("truth", a.truth);

  auto in = open_input(a.truth);
  const auto truth = lvrover::io::read_lines(in);
  const auto sim = lvrover::simulate_cohort(truth, cfg, a.common.resolved_threads());
  std::string body = manifest_line(a.common, manifest);
  for (const auto& l : sim) body += json{{"line_id", l.line_id}, {"hypotheses", l.hypotheses}}.dump() + "\n";
  emit(a.common, body);
  return 0;
}

struct BenchArgs {
  Common common;
  std::size_t min_n = 2, max_n = 1024;
  std::size_t line_chars = 80;
  std::size_t batch_lines = 4;
  std::size_t repeats = 5;
  std::size_t rover_n = 16;
  std::vector<std::size_t> rover_words = {16, 32, 64, 128};
  double min_seconds = 0.02;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& a) {
  if (a.min_n == 0 || a.max_n < a.min_n) throw lvrover::ConfigError("invalid --min-n/--max-n range");
  lvrover::bench::Config cfg;
  cfg.ns.clear();
  for (std::size_t n = a.min_n; n <= a.max_n; n *= 2) cfg.ns.push_back(n);
  cfg.line_chars = a.line_chars;
  cfg.batch_lines = a.batch_lines;
  cfg.repeats = a.repeats;
  cfg.rover_n = a.rover_n;
  cfg.rover_words = a.rover_words;
  cfg.min_seconds = a.min_seconds;
  cfg.seed = a.seed;

  lvrover::io::RunManifest manifest{"bench"};
  manifest.parameters = {{"ns", cfg.ns},           {"line_chars", cfg.line_chars}, {"batch_lines", cfg.batch_lines},
                         {"repeats", cfg.repeats}, {"rover_n", cfg.rover_n},       {"rover_words", cfg.rover_words},
                         {"seed", cfg.seed}};
  emit(a.common, manifest_comment(a.common, manifest) + lvrover::bench::to_csv(lvrover::bench::run(cfg)));
  return 0;
}

struct PipelineArgs {
  Common common;
  TokenArgs tokens;
  LexiconArgs lexicon;
  ChannelArgs channel;
  std::string truth;
  std::size_t lines = 500;
  std::size_t vocab = 1000;
  bool no_truth_lexicon = false;
  std::size_t distractor_factor = 10;
  std::string reference = "first";
  std::string csv;
  std::string format = "table";
};

int cmd_pipeline(const PipelineArgs& a) {
  lvrover::io::RunManifest manifest{"pipeline"};
  const auto topts = a.tokens.resolve();
  lvrover::PipelineConfig cfg;
  cfg.cohort = a.channel.resolve(topts.delimiter);
  cfg.policy = a.lexicon.policy();
  cfg.truth_lexicon = !a.no_truth_lexicon;
  cfg.distractor_factor = a.distractor_factor;
  cfg.rover.tokenize = topts;
  cfg.rover.reference = a.reference == "longest" ? lvrover::ReferencePolicy::longest : lvrover::ReferencePolicy::first;
  cfg.combine.tokenize = topts;
  cfg.threads = a.common.resolved_threads();

  a.tokens.record(manifest.parameters);
  a.lexicon.record(manifest.parameters);
  a.channel.record(manifest.parameters, cfg.cohort);
  manifest.parameters["truth_lexicon"] = cfg.truth_lexicon;
  manifest.parameters["distractor_factor"] = cfg.distractor_factor;
  manifest.parameters["reference"] = a.reference;

  const auto lexicons = a.lexicon.load_each(topts.delimiter, manifest);
  for (std::size_t i = 0; i < lexicons.size(); ++i) cfg.lexicons.push_back({a.lexicon.paths[i], lexicons[i]});

  std::vector<std::string> truth;
  if (!a.truth.empty()) {
    manifest.add_input("truth", a.truth);
    auto in = open_input(a.truth);
    truth = lvrover::io::read_lines(in);
  } else {
    manifest.parameters["synthetic_lines"] = a.lines;
    manifest.parameters["synthetic_vocab"] = a.vocab;
    truth = lvrover::make_synthetic_corpus(a.lines, a.vocab, 4, 10, a.channel.seed).lines;
  }

  const auto report = lvrover::run_pipeline(truth, cfg);
  const std::string csv = lvrover::pipeline_csv(report);
  if (!a.csv.empty()) {
    std::ofstream out(a.csv, std::ios::binary | std::ios::trunc);
    if (!out) throw lvrover::InputError("cannot write " + a.csv);
    out << manifest_comment(a.common, manifest) << csv;
  }
  if (a.format == "csv") {
    emit(a.common, manifest_comment(a.common, manifest) + csv);
  } else {
    std::ostringstream os;
    os << lvrover::pipeline_table(report);
    char buf[128];
    std::snprintf(buf, sizeof buf, "recognizers %zu  mean single CER %.2f%%  best single #%zu\n", cfg.cohort.size,
                  100.0 * report.mean_single_cer, report.best_single);
    os << buf;
    emit(a.common, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LV-ROVER: lexicon-verified combination of raw recognizer outputs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lvrover " LVROVER_VERSION);

  CombineArgs combine;
  auto* c = app.add_subcommand("combine", "Combine hypotheses with lexicon-verified lattice voting");
  c->add_option("--hypotheses", combine.hypotheses, "Hypotheses file (JSONL or plain-text blocks)")->required();
  c->add_flag("--forward-only", combine.forward_only, "Skip the backward voting pass");
  add_lexicon_args(c, combine.lexicon);
  add_token_args(c, combine.tokens);
  add_common(c, combine.common);

  RoverArgs rover;
  auto* r = app.add_subcommand("rover", "Combine hypotheses with the classic ROVER baseline");
  r->add_option("--hypotheses", rover.hypotheses, "Hypotheses file (JSONL or plain-text blocks)")->required();
  r->add_option("--reference", rover.reference, "Reference hypothesis")
      ->check(CLI::IsMember({"first", "longest"}))
      ->capture_default_str();
  add_token_args(r, rover.tokens);
  add_common(r, rover.common);

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Score hypotheses against references (CER/WER)");
  e->add_option("--ref", eval.ref, "Reference lines (plain text or JSONL with \"text\")")->required();
  e->add_option("--hyp", eval.hyp, "Hypothesis lines (plain text or JSONL with \"text\")")->required();
  e->add_flag("--per-line", eval.per_line, "Include per-line edit counts");
  e->add_option("--csv", eval.csv, "Also write the report as CSV");
  e->add_option("--format", eval.format, "Report format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  add_token_args(e, eval.tokens);
  add_common(e, eval.common);

  SimulateArgs simulate;
  auto* s = app.add_subcommand("simulate", "Generate a synthetic recognizer cohort from ground truth");
  s->add_option("--truth", simulate.truth, "Ground-truth lines")->required();
  add_channel_args(s, simulate.channel);
  add_token_args(s, simulate.tokens);
  add_common(s, simulate.common);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Wall-time scaling of LV-ROVER and ROVER (CSV)");
  b->add_option("--min-n", bench.min_n, "Smallest cohort size")->capture_default_str();
  b->add_option("--max-n", bench.max_n, "Largest cohort size (doubling from --min-n)")->capture_default_str();
  b->add_option("--line-chars", bench.line_chars, "Approximate characters per line")->capture_default_str();
  b->add_option("--batch-lines", bench.batch_lines, "Lines per timed batch")->capture_default_str();
  b->add_option("--repeats", bench.repeats, "Samples per measurement (median reported)")->capture_default_str();
  b->add_option("--rover-n", bench.rover_n, "Cohort size of the ROVER line-length sweep")->capture_default_str();
  b->add_option("--rover-words", bench.rover_words, "Line lengths in words for the ROVER sweep")->capture_default_str();
  b->add_option("--min-seconds", bench.min_seconds, "Minimum wall time per sample")->capture_default_str();
  b->add_option("--seed", bench.seed, "Workload seed")->capture_default_str();
  add_common(b, bench.common);

  PipelineArgs pipeline;
  auto* p = app.add_subcommand("pipeline", "Simulate, combine and compare LV-ROVER, ROVER and single recognizers");
  p->add_option("--truth", pipeline.truth, "Ground-truth lines (default: synthetic corpus)");
  p->add_option("--lines", pipeline.lines, "Synthetic corpus size in lines")->capture_default_str();
  p->add_option("--vocab", pipeline.vocab, "Synthetic vocabulary size")->capture_default_str();
  p->add_flag("--no-truth-lexicon", pipeline.no_truth_lexicon, "Skip the ground-truth vocabulary lexicon rows");
  p->add_option("--distractor-factor", pipeline.distractor_factor, "Pad the truth lexicon with this many times its size")
      ->capture_default_str();
  p->add_option("--reference", pipeline.reference, "ROVER reference hypothesis")
      ->check(CLI::IsMember({"first", "longest"}))
      ->capture_default_str();
  p->add_option("--csv", pipeline.csv, "Also write the comparison as CSV");
  p->add_option("--format", pipeline.format, "Output format")->check(CLI::IsMember({"table", "csv"}))->capture_default_str();
  pipeline.channel.target_cer = 0.10;
  add_channel_args(p, pipeline.channel);
  add_lexicon_args(p, pipeline.lexicon);
  add_token_args(p, pipeline.tokens);
  add_common(p, pipeline.common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c->parsed()) return cmd_combine(combine);
    if (r->parsed()) return cmd_rover(rover);
    if (e->parsed()) return cmd_eval(eval);
    if (s->parsed()) return cmd_simulate(simulate);
    if (b->parsed()) return cmd_bench(bench);
    if (p->parsed()) return cmd_pipeline(pipeline);
  } catch (const std::exception& ex) {
    std::cerr << "lvrover: error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
