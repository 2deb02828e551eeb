// Copyright 2026 The novice-lint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "novlint/analyzer.hpp"
#include "novlint/corpus.hpp"
#include "novlint/reporting.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitClean = 0;        // ran, no diagnostics
constexpr int kExitDiagnostics = 1;  // ran, diagnostics emitted
constexpr int kExitError = 2;        // usage or I/O failure

constexpr const char* kVersion = "0.1.0";

struct CommonFlags {
  std::string rules = "all";
  std::string format = "text";
  std::string concepts_file;
  int u_threshold = 3;
  std::string min_confidence = "low";
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--rules", flags->rules,
                  "Rules to run: 'all', 'novice', 'syntax', or letters "
                  "such as 'ABS' or 'A,B,S'")
      ->capture_default_str();
  cmd->add_option("--format", flags->format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--concepts", flags->concepts_file,
                  "Concept map file overlaying the built-in defaults");
  cmd->add_option("--u-threshold", flags->u_threshold,
                  "Minimum equality branches before rule U fires")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--min-confidence", flags->min_confidence,
                  "Drop diagnostics below this confidence")
      ->check(CLI::IsMember({"high", "low"}))
      ->capture_default_str();
}

// Turns validated flags into analyzer options; exits with a usage error
// before any analysis when a flag value is unusable.
bool build_options(const CommonFlags& flags, novlint::AnalyzerOptions* out,
                   std::string* error) {
  auto rules = novlint::RuleSet::parse(flags.rules, error);
  if (!rules.has_value()) return false;
  out->rules = *rules;
  out->u_threshold = flags.u_threshold;
  out->min_confidence = flags.min_confidence == "high"
                            ? novlint::Confidence::High
                            : novlint::Confidence::Low;
  out->concepts = novlint::ConceptMap::defaults();
  if (!flags.concepts_file.empty()) {
    auto overlay = novlint::ConceptMap::load(flags.concepts_file, error);
    if (!overlay.has_value()) return false;
    out->concepts.overlay(*overlay);
  }
  std::string missing;
  if (!out->concepts.covers_all_rules(&missing)) {
    *error = "concept map has no entry for '" + missing + "'";
    return false;
  }
  return true;
}

std::vector<std::string> expand_paths(const std::vector<std::string>& paths,
                                      std::string* error) {
  std::vector<std::string> files;
  for (const std::string& path : paths) {
    std::error_code ec;
    if (fs::is_directory(path, ec) && !ec) {
      for (auto it = fs::recursive_directory_iterator(
               path, fs::directory_options::skip_permission_denied, ec);
           it != fs::recursive_directory_iterator(); ++it) {
        std::error_code file_ec;
        if (it->is_regular_file(file_ec) && !file_ec &&
            it->path().extension() == ".java") {
          files.push_back(it->path().string());
        }
      }
      continue;
    }
    if (fs::is_regular_file(path, ec) && !ec) {
      files.push_back(path);
      continue;
    }
    *error = "no such file or directory: " + path;
    return {};
  }
  std::sort(files.begin(), files.end());
  return files;
}

int run_check(const std::vector<std::string>& paths, const CommonFlags& flags) {
  std::string error;
  novlint::AnalyzerOptions options;
  if (!build_options(flags, &options, &error)) {
    std::cerr << "novice-lint: " << error << "\n";
    return kExitError;
  }
  std::vector<std::string> files = expand_paths(paths, &error);
  if (!error.empty()) {
    std::cerr << "novice-lint: " << error << "\n";
    return kExitError;
  }
  if (files.empty()) {
    std::cerr << "novice-lint: no source files to check\n";
    return kExitError;
  }

  std::vector<novlint::FileAnalysis> analyses;
  std::vector<const novlint::SourceFile*> sources;
  std::vector<novlint::Diagnostic> diagnostics;
  uint32_t file_id = 0;
  for (const std::string& path : files) {
    auto analysis = novlint::analyze_file(path, options, file_id++, &error);
    if (!analysis.has_value()) {
      std::cerr << "novice-lint: " << error << "\n";
      return kExitError;
    }
    analyses.push_back(std::move(*analysis));
  }
  for (const novlint::FileAnalysis& analysis : analyses) {
    sources.push_back(analysis.file.get());
    diagnostics.insert(diagnostics.end(), analysis.diagnostics.begin(),
                       analysis.diagnostics.end());
  }
  novlint::sort_diagnostics(diagnostics);

  if (flags.format == "json") {
    std::cout << novlint::render_json(diagnostics, sources);
  } else if (flags.format == "csv") {
    std::cout << novlint::render_csv(diagnostics, sources);
  } else {
    std::cout << novlint::render_text(diagnostics, sources);
    if (!diagnostics.empty()) {
      std::cout << "\n" << diagnostics.size()
                << (diagnostics.size() == 1 ? " warning\n" : " warnings\n");
    }
  }
  return diagnostics.empty() ? kExitClean : kExitDiagnostics;
}

int run_corpus(const std::string& dir, const CommonFlags& flags,
               unsigned jobs) {
  std::string error;
  novlint::CorpusOptions options;
  options.jobs = jobs;
  if (!build_options(flags, &options.analyzer, &error)) {
    std::cerr << "novice-lint: " << error << "\n";
    return kExitError;
  }
  auto report = novlint::analyze_corpus(dir, options, &error);
  if (!report.has_value()) {
    std::cerr << "novice-lint: " << error << "\n";
    return kExitError;
  }
  if (flags.format == "json") {
    std::cout << novlint::report_to_json(*report);
  } else if (flags.format == "csv") {
    std::cout << novlint::report_to_csv(*report);
  } else {
    std::cout << novlint::report_to_text(*report);
  }
  return report->total_warnings == 0 ? kExitClean : kExitDiagnostics;
}

// Side input for the standard-ruleset comparison: a two-column CSV
// `corpus,standard_warnings` with rows labeled `a` and `b`.
bool load_standard_counts(const std::string& path,
                          novlint::ExternalCounts* counts, std::string* error) {
  std::ifstream in(path);
  if (!in) {
    *error = "cannot read standard-counts file: " + path;
    return false;
  }
  bool have_a = false, have_b = false;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.starts_with("corpus")) continue;
    std::istringstream row(line);
    std::string label, count_text;
    if (!std::getline(row, label, ',') || !std::getline(row, count_text)) {
      *error = "standard-counts line " + std::to_string(line_no) +
               ": expected '<a|b>,<count>'";
      return false;
    }
    size_t value = 0;
    try {
      value = std::stoull(count_text);
    } catch (const std::exception&) {
      *error = "standard-counts line " + std::to_string(line_no) +
               ": bad count '" + count_text + "'";
      return false;
    }
    if (label == "a" || label == "A") {
      counts->a_warnings = value;
      have_a = true;
    } else if (label == "b" || label == "B") {
      counts->b_warnings = value;
      have_b = true;
    } else {
      *error = "standard-counts line " + std::to_string(line_no) +
               ": label must be 'a' or 'b'";
      return false;
    }
  }
  if (!have_a || !have_b) {
    *error = "standard-counts file needs one 'a' row and one 'b' row";
    return false;
  }
  return true;
}

int run_compare(const std::string& dir_a, const std::string& dir_b,
                const CommonFlags& flags, unsigned jobs,
                const std::string& standard_csv) {
  std::string error;
  novlint::CorpusOptions options;
  options.jobs = jobs;
  if (!build_options(flags, &options.analyzer, &error)) {
    std::cerr << "novice-lint: " << error << "\n";
    return kExitError;
  }
  auto report_a = novlint::analyze_corpus(dir_a, options, &error);
  if (!report_a.has_value()) {
    std::cerr << "novice-lint: " << error << "\n";
    return kExitError;
  }
  auto report_b = novlint::analyze_corpus(dir_b, options, &error);
  if (!report_b.has_value()) {
    std::cerr << "novice-lint: " << error << "\n";
    return kExitError;
  }
  std::optional<novlint::ExternalCounts> external;
  if (!standard_csv.empty()) {
    novlint::ExternalCounts counts;
    if (!load_standard_counts(standard_csv, &counts, &error)) {
      std::cerr << "novice-lint: " << error << "\n";
      return kExitError;
    }
    external = counts;
  }
  novlint::CorpusComparison cmp =
      novlint::compare_corpora(*report_a, *report_b, external);
  if (flags.format == "json") {
    std::cout << novlint::comparison_to_json(cmp);
  } else if (flags.format == "csv") {
    std::cout << novlint::comparison_to_csv(cmp);
  } else {
    std::cout << novlint::comparison_to_text(cmp);
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"novice-lint: a pedagogical static analyzer for beginner Java"};
  app.set_version_flag("--version", std::string("novice-lint ") + kVersion);
  app.require_subcommand(1);

  CommonFlags check_flags;
  std::vector<std::string> check_paths;
  CLI::App* check = app.add_subcommand("check", "Lint files and print diagnostics");
  check->add_option("paths", check_paths, "Source files or directories")
      ->required();
  add_common_flags(check, &check_flags);

  CommonFlags corpus_flags;
  std::string corpus_dir;
  unsigned corpus_jobs = 0;
  CLI::App* corpus = app.add_subcommand(
      "corpus", "Analyze a corpus directory (one project per subdirectory)");
  corpus->add_option("dir", corpus_dir, "Corpus root directory")->required();
  corpus->add_option("--jobs", corpus_jobs, "Parallel analysis threads (0 = auto)");
  add_common_flags(corpus, &corpus_flags);

  CommonFlags compare_flags;
  std::string compare_a, compare_b, standard_csv;
  unsigned compare_jobs = 0;
  CLI::App* compare = app.add_subcommand(
      "compare", "Analyze two corpora and compare their warning rates");
  compare->add_option("dirA", compare_a, "First corpus root")->required();
  compare->add_option("dirB", compare_b, "Second corpus root")->required();
  compare->add_option("--standard-csv", standard_csv,
                      "CSV with externally computed standard-ruleset counts "
                      "(rows: a,<count> and b,<count>)");
  compare->add_option("--jobs", compare_jobs, "Parallel analysis threads (0 = auto)");
  add_common_flags(compare, &compare_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << "novice-lint: " << e.what() << "\n";
    std::cerr << "run 'novice-lint --help' for usage\n";
    return kExitError;
  }

  if (check->parsed()) return run_check(check_paths, check_flags);
  if (corpus->parsed()) return run_corpus(corpus_dir, corpus_flags, corpus_jobs);
  if (compare->parsed()) {
    return run_compare(compare_a, compare_b, compare_flags, compare_jobs,
                       standard_csv);
  }
  return kExitError;
}
