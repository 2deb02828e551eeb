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

#include "novlint/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "novlint/rules.hpp"

namespace fs = std::filesystem;

namespace novlint {

size_t count_loc(std::string_view text) {
  size_t lines = 0;
  bool line_has_content = false;
  for (char c : text) {
    if (c == '\n') {
      if (line_has_content) ++lines;
      line_has_content = false;
      continue;
    }
    if (c != ' ' && c != '\t' && c != '\r' && c != '\f' && c != '\v') {
      line_has_content = true;
    }
  }
  if (line_has_content) ++lines;
  return lines;
}

double round_one_decimal(double value) { return std::round(value * 10.0) / 10.0; }

std::optional<double> warnings_per_kloc(size_t warnings, size_t loc) {
  if (loc == 0) return std::nullopt;
  return round_one_decimal(static_cast<double>(warnings) /
                           (static_cast<double>(loc) / 1000.0));
}

std::optional<double> rate_increase_pct(double a_rate, double b_rate) {
  if (b_rate == 0.0) return std::nullopt;
  return round_one_decimal((a_rate / b_rate - 1.0) * 100.0);
}

void accumulate(CorpusReport& report, const ProjectStats& project) {
  report.projects.push_back(project);
  report.total_files += project.file_count;
  report.total_loc += project.loc;
  report.total_warnings += project.novice_warning_count;
  if (project.novice_warning_count == 0) ++report.projects_without_warning;
  for (const auto& [letter, count] : project.per_rule_counts) {
    report.per_rule_counts[letter] += count;
  }
  report.total_warnings_per_kloc =
      warnings_per_kloc(report.total_warnings, report.total_loc);
  std::sort(report.projects.begin(), report.projects.end(),
            [](const ProjectStats& a, const ProjectStats& b) {
              return a.project_id < b.project_id;
            });
}

namespace {

bool has_source_extension(const fs::path& path,
                          const std::vector<std::string>& extensions) {
  std::string ext = path.extension().string();
  return std::find(extensions.begin(), extensions.end(), ext) !=
         extensions.end();
}

struct FileTask {
  size_t project_index;
  std::string path;
};

struct FileOutcome {
  bool readable = false;
  size_t loc = 0;
  std::map<char, size_t> per_rule_counts;
  size_t warning_count = 0;
};

}  // namespace

std::optional<CorpusReport> analyze_corpus(const std::string& root_dir,
                                           const CorpusOptions& options,
                                           std::string* error) {
  std::error_code ec;
  fs::path root(root_dir);
  if (!fs::exists(root, ec) || ec) {
    if (error != nullptr) *error = "corpus root does not exist: " + root_dir;
    return std::nullopt;
  }
  if (!fs::is_directory(root, ec) || ec) {
    if (error != nullptr) *error = "corpus root is not a directory: " + root_dir;
    return std::nullopt;
  }

  // Project layout: one project per immediate subdirectory; loose files at
  // the root form one implicit project named after the root directory.
  std::vector<std::string> project_names;
  std::vector<std::vector<std::string>> project_files;
  std::vector<std::string> loose_files;

  std::vector<fs::directory_entry> entries;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    entries.push_back(entry);
  }
  if (ec) {
    if (error != nullptr) *error = "cannot list corpus root: " + root_dir;
    return std::nullopt;
  }
  std::sort(entries.begin(), entries.end(),
            [](const fs::directory_entry& a, const fs::directory_entry& b) {
              return a.path().filename() < b.path().filename();
            });

  for (const auto& entry : entries) {
    std::error_code entry_ec;
    if (entry.is_directory(entry_ec) && !entry_ec) {
      std::vector<std::string> files;
      for (auto it = fs::recursive_directory_iterator(
               entry.path(), fs::directory_options::skip_permission_denied,
               entry_ec);
           it != fs::recursive_directory_iterator(); ++it) {
        std::error_code file_ec;
        if (it->is_regular_file(file_ec) && !file_ec &&
            has_source_extension(it->path(), options.extensions)) {
          files.push_back(it->path().string());
        }
      }
      std::sort(files.begin(), files.end());
      project_names.push_back(entry.path().filename().string());
      project_files.push_back(std::move(files));
    } else if (entry.is_regular_file(entry_ec) && !entry_ec &&
               has_source_extension(entry.path(), options.extensions)) {
      loose_files.push_back(entry.path().string());
    }
  }
  if (!loose_files.empty()) {
    std::sort(loose_files.begin(), loose_files.end());
    std::string implicit = root.filename().string();
    if (implicit.empty()) implicit = root.parent_path().filename().string();
    if (implicit.empty()) implicit = ".";
    project_names.push_back(implicit);
    project_files.push_back(std::move(loose_files));
  }

  std::vector<FileTask> tasks;
  for (size_t p = 0; p < project_files.size(); ++p) {
    for (const std::string& path : project_files[p]) {
      tasks.push_back(FileTask{p, path});
    }
  }

  // Fan the per-file work out; results land in a slot per task, so the merge
  // below is deterministic no matter how the threads interleave.
  std::vector<FileOutcome> outcomes(tasks.size());
  unsigned jobs = options.jobs != 0 ? options.jobs
                                    : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<size_t>(tasks.size(), 1));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      std::string io_error;
      std::optional<FileAnalysis> analysis =
          analyze_file(tasks[i].path, options.analyzer, 0, &io_error);
      if (!analysis.has_value()) continue;
      FileOutcome& outcome = outcomes[i];
      outcome.readable = true;
      outcome.loc = analysis->loc;
      outcome.warning_count = analysis->diagnostics.size();
      for (const Diagnostic& diag : analysis->diagnostics) {
        ++outcome.per_rule_counts[diag.rule_letter];
      }
    }
  };
  if (jobs <= 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<ProjectStats> stats(project_names.size());
  for (size_t p = 0; p < project_names.size(); ++p) {
    stats[p].project_id = project_names[p];
  }
  for (size_t i = 0; i < tasks.size(); ++i) {
    ProjectStats& project = stats[tasks[i].project_index];
    const FileOutcome& outcome = outcomes[i];
    if (!outcome.readable) {
      project.unreadable_files.push_back(tasks[i].path);
      continue;
    }
    ++project.file_count;
    project.loc += outcome.loc;
    project.novice_warning_count += outcome.warning_count;
    for (const auto& [letter, count] : outcome.per_rule_counts) {
      project.per_rule_counts[letter] += count;
    }
  }

  CorpusReport report;
  report.label = root.filename().string();
  if (report.label.empty()) report.label = root_dir;
  for (ProjectStats& project : stats) {
    project.warnings_per_kloc =
        warnings_per_kloc(project.novice_warning_count, project.loc);
    accumulate(report, project);
  }
  return report;
}

CorpusComparison compare_corpora(const CorpusReport& a, const CorpusReport& b,
                                 const std::optional<ExternalCounts>& external) {
  CorpusComparison cmp;
  cmp.a_label = a.label;
  cmp.b_label = b.label;
  cmp.a_rate = a.total_warnings_per_kloc;
  cmp.b_rate = b.total_warnings_per_kloc;
  cmp.a_projects = a.projects.size();
  cmp.b_projects = b.projects.size();
  cmp.a_projects_without_warning = a.projects_without_warning;
  cmp.b_projects_without_warning = b.projects_without_warning;
  if (cmp.a_rate.has_value() && cmp.b_rate.has_value()) {
    cmp.increase_pct = rate_increase_pct(*cmp.a_rate, *cmp.b_rate);
  }
  if (external.has_value()) {
    cmp.external_a_rate = warnings_per_kloc(external->a_warnings, a.total_loc);
    cmp.external_b_rate = warnings_per_kloc(external->b_warnings, b.total_loc);
    if (cmp.external_a_rate.has_value() && cmp.external_b_rate.has_value()) {
      cmp.external_increase_pct =
          rate_increase_pct(*cmp.external_a_rate, *cmp.external_b_rate);
    }
  }
  return cmp;
}

std::vector<RuleShare> top_rules(const CorpusReport& report, size_t n) {
  std::vector<RuleShare> shares;
  for (const auto& [letter, count] : report.per_rule_counts) {
    if (count == 0) continue;
    RuleShare share;
    share.letter = letter;
    share.count = count;
    share.percentage =
        report.total_warnings == 0
            ? 0.0
            : round_one_decimal(100.0 * static_cast<double>(count) /
                                static_cast<double>(report.total_warnings));
    shares.push_back(share);
  }
  std::sort(shares.begin(), shares.end(),
            [](const RuleShare& a, const RuleShare& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.letter < b.letter;
            });
  if (shares.size() > n) shares.resize(n);
  return shares;
}

namespace {

std::string format_rate(const std::optional<double>& rate) {
  if (!rate.has_value()) return "n/a";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", *rate);
  return buffer;
}

std::string format_pct(const std::optional<double>& pct) {
  if (!pct.has_value()) return "n/a";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%+.1f%%", *pct);
  return buffer;
}

nlohmann::json optional_rate_json(const std::optional<double>& rate) {
  if (!rate.has_value()) return nullptr;
  return *rate;
}

}  // namespace

std::string report_to_text(const CorpusReport& report) {
  std::ostringstream out;
  out << "corpus: " << report.label << "\n";
  out << "projects: " << report.projects.size() << "  files: "
      << report.total_files << "  loc: " << report.total_loc << "\n";
  out << "warnings: " << report.total_warnings << "  per kloc: "
      << format_rate(report.total_warnings_per_kloc)
      << "  projects without warning: " << report.projects_without_warning
      << "\n\n";
  for (const ProjectStats& project : report.projects) {
    out << "  " << project.project_id << ": files " << project.file_count
        << ", loc " << project.loc << ", warnings "
        << project.novice_warning_count << ", per kloc "
        << format_rate(project.warnings_per_kloc);
    if (!project.unreadable_files.empty()) {
      out << ", unreadable " << project.unreadable_files.size();
    }
    out << "\n";
  }
  std::vector<RuleShare> top = top_rules(report, 3);
  if (!top.empty()) {
    out << "\ntop rules:\n";
    for (const RuleShare& share : top) {
      const RuleDescriptor* rule = find_rule(share.letter);
      out << "  " << share.letter << "  "
          << (rule != nullptr ? rule->description : "") << "  "
          << share.count << " (" << format_rate(share.percentage) << "%)\n";
    }
  }
  return out.str();
}

std::string report_to_json(const CorpusReport& report) {
  nlohmann::json j;
  j["version"] = 1;
  j["label"] = report.label;
  j["totals"] = {
      {"files", report.total_files},
      {"loc", report.total_loc},
      {"warnings", report.total_warnings},
      {"warnings_per_kloc", optional_rate_json(report.total_warnings_per_kloc)},
      {"projects_without_warning", report.projects_without_warning},
  };
  nlohmann::json projects = nlohmann::json::array();
  for (const ProjectStats& project : report.projects) {
    nlohmann::json p;
    p["project"] = project.project_id;
    p["files"] = project.file_count;
    p["loc"] = project.loc;
    p["warnings"] = project.novice_warning_count;
    p["warnings_per_kloc"] = optional_rate_json(project.warnings_per_kloc);
    nlohmann::json rules = nlohmann::json::object();
    for (const auto& [letter, count] : project.per_rule_counts) {
      rules[std::string(1, letter)] = count;
    }
    p["per_rule_counts"] = std::move(rules);
    p["unreadable_files"] = project.unreadable_files;
    projects.push_back(std::move(p));
  }
  j["projects"] = std::move(projects);
  nlohmann::json rules = nlohmann::json::object();
  for (const auto& [letter, count] : report.per_rule_counts) {
    rules[std::string(1, letter)] = count;
  }
  j["per_rule_counts"] = std::move(rules);
  nlohmann::json top = nlohmann::json::array();
  for (const RuleShare& share : top_rules(report, 3)) {
    top.push_back({{"rule", std::string(1, share.letter)},
                   {"count", share.count},
                   {"percentage", share.percentage}});
  }
  j["top_rules"] = std::move(top);
  return j.dump(2, ' ', false,
                nlohmann::json::error_handler_t::replace) +
         "\n";
}

std::string report_to_csv(const CorpusReport& report) {
  std::ostringstream out;
  out << "project,files,loc,warnings,warnings_per_kloc";
  for (const RuleDescriptor& rule : rule_registry()) {
    out << "," << rule.letter;
  }
  out << "\n";
  auto row = [&](const std::string& name, size_t files, size_t loc,
                 size_t warnings, const std::optional<double>& rate,
                 const std::map<char, size_t>& counts) {
    out << name << "," << files << "," << loc << "," << warnings << ","
        << format_rate(rate);
    for (const RuleDescriptor& rule : rule_registry()) {
      auto it = counts.find(rule.letter);
      out << "," << (it == counts.end() ? 0 : it->second);
    }
    out << "\n";
  };
  for (const ProjectStats& project : report.projects) {
    row(project.project_id, project.file_count, project.loc,
        project.novice_warning_count, project.warnings_per_kloc,
        project.per_rule_counts);
  }
  row("TOTAL", report.total_files, report.total_loc, report.total_warnings,
      report.total_warnings_per_kloc, report.per_rule_counts);
  return out.str();
}

std::string comparison_to_text(const CorpusComparison& cmp) {
  std::ostringstream out;
  out << "corpus A: " << cmp.a_label << "  (" << cmp.a_projects
      << " projects, " << cmp.a_projects_without_warning
      << " without warning)\n";
  out << "corpus B: " << cmp.b_label << "  (" << cmp.b_projects
      << " projects, " << cmp.b_projects_without_warning
      << " without warning)\n";
  out << "novice warnings per kloc: A " << format_rate(cmp.a_rate) << " vs B "
      << format_rate(cmp.b_rate) << "  increase "
      << format_pct(cmp.increase_pct) << "\n";
  if (cmp.external_a_rate.has_value() || cmp.external_b_rate.has_value()) {
    out << "standard warnings per kloc: A " << format_rate(cmp.external_a_rate)
        << " vs B " << format_rate(cmp.external_b_rate) << "  increase "
        << format_pct(cmp.external_increase_pct) << "\n";
  }
  return out.str();
}

std::string comparison_to_json(const CorpusComparison& cmp) {
  nlohmann::json j;
  j["version"] = 1;
  j["a"] = {{"label", cmp.a_label},
            {"projects", cmp.a_projects},
            {"projects_without_warning", cmp.a_projects_without_warning},
            {"warnings_per_kloc", optional_rate_json(cmp.a_rate)}};
  j["b"] = {{"label", cmp.b_label},
            {"projects", cmp.b_projects},
            {"projects_without_warning", cmp.b_projects_without_warning},
            {"warnings_per_kloc", optional_rate_json(cmp.b_rate)}};
  j["increase_pct"] = optional_rate_json(cmp.increase_pct);
  if (cmp.external_a_rate.has_value() || cmp.external_b_rate.has_value()) {
    j["external"] = {
        {"a_warnings_per_kloc", optional_rate_json(cmp.external_a_rate)},
        {"b_warnings_per_kloc", optional_rate_json(cmp.external_b_rate)},
        {"increase_pct", optional_rate_json(cmp.external_increase_pct)}};
  }
  return j.dump(2, ' ', false,
                nlohmann::json::error_handler_t::replace) +
         "\n";
}

std::string comparison_to_csv(const CorpusComparison& cmp) {
  std::ostringstream out;
  out << "metric,a,b,increase_pct\n";
  out << "warnings_per_kloc," << format_rate(cmp.a_rate) << ","
      << format_rate(cmp.b_rate) << ",";
  if (cmp.increase_pct.has_value()) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.1f", *cmp.increase_pct);
    out << buffer;
  } else {
    out << "n/a";
  }
  out << "\n";
  out << "projects_without_warning," << cmp.a_projects_without_warning << ","
      << cmp.b_projects_without_warning << ",\n";
  if (cmp.external_a_rate.has_value() || cmp.external_b_rate.has_value()) {
    out << "standard_warnings_per_kloc," << format_rate(cmp.external_a_rate)
        << "," << format_rate(cmp.external_b_rate) << ",";
    if (cmp.external_increase_pct.has_value()) {
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%.1f", *cmp.external_increase_pct);
      out << buffer;
    } else {
      out << "n/a";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace novlint
