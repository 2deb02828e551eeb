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

#ifndef NOVLINT_CORPUS_HPP
#define NOVLINT_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "novlint/analyzer.hpp"

namespace novlint {

// Lines containing at least one non-whitespace character; a final line
// without a newline still counts.
size_t count_loc(std::string_view text);

// warnings / (loc / 1000), rounded to one decimal. Undefined when loc == 0.
std::optional<double> warnings_per_kloc(size_t warnings, size_t loc);

// (a / b - 1) * 100 on already-rounded rates, rounded to one decimal.
// Undefined when b is zero.
std::optional<double> rate_increase_pct(double a_rate, double b_rate);

double round_one_decimal(double value);

struct ProjectStats {
  std::string project_id;
  size_t file_count = 0;
  size_t loc = 0;
  size_t novice_warning_count = 0;
  std::optional<double> warnings_per_kloc;  // absent when loc == 0
  std::map<char, size_t> per_rule_counts;
  std::vector<std::string> unreadable_files;
};

struct RuleShare {
  char letter = '?';
  size_t count = 0;
  double percentage = 0.0;  // of all warnings, one decimal

  bool operator==(const RuleShare&) const = default;
};

struct CorpusReport {
  std::string label;
  std::vector<ProjectStats> projects;  // ordered by project_id
  size_t total_files = 0;
  size_t total_loc = 0;
  size_t total_warnings = 0;
  std::optional<double> total_warnings_per_kloc;
  size_t projects_without_warning = 0;
  std::map<char, size_t> per_rule_counts;
};

// Merge a project into running totals; commutative and associative, so the
// per-file work can happen in any order.
void accumulate(CorpusReport& report, const ProjectStats& project);

struct CorpusOptions {
  AnalyzerOptions analyzer;
  std::vector<std::string> extensions = {".java"};
  unsigned jobs = 0;  // 0 = hardware concurrency
};

// Analyzes every source file below `root_dir`. Each immediate subdirectory
// is one project; loose files at the root form one implicit project named
// after the root directory. An unreadable root yields nullopt; unreadable
// individual files are recorded and skipped.
std::optional<CorpusReport> analyze_corpus(const std::string& root_dir,
                                           const CorpusOptions& options,
                                           std::string* error);

// Externally supplied warning counts (e.g. another analyzer's totals) for
// the side-by-side comparison; never computed here.
struct ExternalCounts {
  size_t a_warnings = 0;
  size_t b_warnings = 0;
};

struct CorpusComparison {
  std::string a_label;
  std::string b_label;
  std::optional<double> a_rate;
  std::optional<double> b_rate;
  std::optional<double> increase_pct;  // of a over b
  size_t a_projects = 0;
  size_t b_projects = 0;
  size_t a_projects_without_warning = 0;
  size_t b_projects_without_warning = 0;
  // Filled only when external counts are provided.
  std::optional<double> external_a_rate;
  std::optional<double> external_b_rate;
  std::optional<double> external_increase_pct;
};

CorpusComparison compare_corpora(
    const CorpusReport& a, const CorpusReport& b,
    const std::optional<ExternalCounts>& external = std::nullopt);

// Rules by descending count (ties alphabetically), with their share of all
// warnings as a one-decimal percentage.
std::vector<RuleShare> top_rules(const CorpusReport& report, size_t n);

// Renderers. Text, JSON and CSV agree on every number.
std::string report_to_text(const CorpusReport& report);
std::string report_to_json(const CorpusReport& report);
std::string report_to_csv(const CorpusReport& report);
std::string comparison_to_text(const CorpusComparison& cmp);
std::string comparison_to_json(const CorpusComparison& cmp);
std::string comparison_to_csv(const CorpusComparison& cmp);

}  // namespace novlint

#endif  // NOVLINT_CORPUS_HPP
