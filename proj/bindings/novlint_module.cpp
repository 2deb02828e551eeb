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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "novlint/analyzer.hpp"
#include "novlint/corpus.hpp"
#include "novlint/reporting.hpp"
#include "novlint/rules.hpp"

namespace py = pybind11;
using namespace novlint;

namespace {

AnalyzerOptions make_options(const std::string& rules, int u_threshold,
                             const std::string& min_confidence,
                             const std::string& concepts_file) {
  AnalyzerOptions options;
  std::string error;
  auto parsed = RuleSet::parse(rules, &error);
  if (!parsed.has_value()) throw std::invalid_argument(error);
  options.rules = *parsed;
  options.u_threshold = u_threshold;
  if (min_confidence == "high") {
    options.min_confidence = Confidence::High;
  } else if (min_confidence == "low") {
    options.min_confidence = Confidence::Low;
  } else {
    throw std::invalid_argument("min_confidence must be 'high' or 'low'");
  }
  if (!concepts_file.empty()) {
    auto overlay = ConceptMap::load(concepts_file, &error);
    if (!overlay.has_value()) throw std::invalid_argument(error);
    options.concepts.overlay(*overlay);
  }
  std::string missing;
  if (!options.concepts.covers_all_rules(&missing)) {
    throw std::invalid_argument("concept map has no entry for '" + missing + "'");
  }
  return options;
}

std::string event_kind_string(const RecoveryEvent& event) {
  return recovery_kind_name(event.kind);
}

}  // namespace

PYBIND11_MODULE(novlint, m) {
  m.doc() = "novice-lint: a pedagogical static analyzer for beginner Java";

  py::class_<Span>(m, "Span")
      .def_readonly("file_id", &Span::file_id)
      .def_readonly("start_line", &Span::start_line)
      .def_readonly("start_col", &Span::start_col)
      .def_readonly("end_line", &Span::end_line)
      .def_readonly("end_col", &Span::end_col)
      .def_readonly("byte_start", &Span::byte_start)
      .def_readonly("byte_end", &Span::byte_end)
      .def("__repr__", [](const Span& s) {
        return "<Span " + std::to_string(s.start_line) + ":" +
               std::to_string(s.start_col) + ">";
      });

  py::class_<ConceptRef>(m, "ConceptRef")
      .def_readonly("key", &ConceptRef::concept_key)
      .def_readonly("display_name", &ConceptRef::display_name)
      .def_readonly("reading_reference", &ConceptRef::reading_reference);

  py::class_<Diagnostic>(m, "Diagnostic")
      .def_property_readonly("rule_letter",
                             [](const Diagnostic& d) {
                               return std::string(1, d.rule_letter);
                             })
      .def_readonly("rule_name", &Diagnostic::rule_name)
      .def_readonly("span", &Diagnostic::span)
      .def_readonly("message", &Diagnostic::message)
      .def_readonly("suggestions", &Diagnostic::suggestions)
      .def_readonly("concept", &Diagnostic::concept_ref)
      .def_property_readonly("confidence",
                             [](const Diagnostic& d) {
                               return std::string(confidence_name(d.confidence));
                             })
      .def("__repr__", [](const Diagnostic& d) {
        return "<Diagnostic " + std::string(1, d.rule_letter) + " at " +
               std::to_string(d.span.start_line) + ":" +
               std::to_string(d.span.start_col) + ">";
      });

  py::class_<RecoveryEvent>(m, "RecoveryEvent")
      .def_property_readonly("kind", &event_kind_string)
      .def_readonly("span", &RecoveryEvent::span)
      .def_readonly("expected", &RecoveryEvent::expected)
      .def_readonly("found", &RecoveryEvent::found)
      .def_readonly("repair", &RecoveryEvent::repair)
      .def_readonly("subject", &RecoveryEvent::subject);

  py::class_<FileAnalysis>(m, "LintResult")
      .def_property_readonly(
          "path", [](const FileAnalysis& a) { return a.file->path(); })
      .def_readonly("diagnostics", &FileAnalysis::diagnostics)
      .def_readonly("events", &FileAnalysis::events)
      .def_readonly("loc", &FileAnalysis::loc)
      .def("to_text",
           [](const FileAnalysis& a) {
             return render_text(a.diagnostics, {a.file.get()});
           })
      .def("to_json",
           [](const FileAnalysis& a) {
             return render_json(a.diagnostics, {a.file.get()});
           })
      .def("to_csv", [](const FileAnalysis& a) {
        return render_csv(a.diagnostics, {a.file.get()});
      });

  py::class_<RuleShare>(m, "RuleShare")
      .def_property_readonly("rule",
                             [](const RuleShare& r) {
                               return std::string(1, r.letter);
                             })
      .def_readonly("count", &RuleShare::count)
      .def_readonly("percentage", &RuleShare::percentage);

  py::class_<ProjectStats>(m, "ProjectStats")
      .def_readonly("project_id", &ProjectStats::project_id)
      .def_readonly("file_count", &ProjectStats::file_count)
      .def_readonly("loc", &ProjectStats::loc)
      .def_readonly("novice_warning_count", &ProjectStats::novice_warning_count)
      .def_readonly("warnings_per_kloc", &ProjectStats::warnings_per_kloc)
      .def_readonly("per_rule_counts", &ProjectStats::per_rule_counts)
      .def_readonly("unreadable_files", &ProjectStats::unreadable_files);

  py::class_<CorpusReport>(m, "CorpusReport")
      .def_readonly("label", &CorpusReport::label)
      .def_readonly("projects", &CorpusReport::projects)
      .def_readonly("total_files", &CorpusReport::total_files)
      .def_readonly("total_loc", &CorpusReport::total_loc)
      .def_readonly("total_warnings", &CorpusReport::total_warnings)
      .def_readonly("warnings_per_kloc", &CorpusReport::total_warnings_per_kloc)
      .def_readonly("projects_without_warning",
                    &CorpusReport::projects_without_warning)
      .def_readonly("per_rule_counts", &CorpusReport::per_rule_counts)
      .def("top_rules",
           [](const CorpusReport& r, size_t n) { return top_rules(r, n); },
           py::arg("n") = 3)
      .def("to_text", &report_to_text)
      .def("to_json", &report_to_json)
      .def("to_csv", &report_to_csv);

  py::class_<CorpusComparison>(m, "CorpusComparison")
      .def_readonly("a_label", &CorpusComparison::a_label)
      .def_readonly("b_label", &CorpusComparison::b_label)
      .def_readonly("a_rate", &CorpusComparison::a_rate)
      .def_readonly("b_rate", &CorpusComparison::b_rate)
      .def_readonly("increase_pct", &CorpusComparison::increase_pct)
      .def_readonly("a_projects", &CorpusComparison::a_projects)
      .def_readonly("b_projects", &CorpusComparison::b_projects)
      .def_readonly("a_projects_without_warning",
                    &CorpusComparison::a_projects_without_warning)
      .def_readonly("b_projects_without_warning",
                    &CorpusComparison::b_projects_without_warning)
      .def_readonly("external_a_rate", &CorpusComparison::external_a_rate)
      .def_readonly("external_b_rate", &CorpusComparison::external_b_rate)
      .def_readonly("external_increase_pct",
                    &CorpusComparison::external_increase_pct)
      .def("to_text", &comparison_to_text)
      .def("to_json", &comparison_to_json)
      .def("to_csv", &comparison_to_csv);

  m.def(
      "lint_source",
      [](const std::string& text, const std::string& path,
         const std::string& rules, int u_threshold,
         const std::string& min_confidence, const std::string& concepts) {
        return analyze_source(path, text,
                              make_options(rules, u_threshold, min_confidence,
                                           concepts));
      },
      py::arg("text"), py::arg("path") = "<memory>", py::arg("rules") = "all",
      py::arg("u_threshold") = 3, py::arg("min_confidence") = "low",
      py::arg("concepts") = "",
      "Lint an in-memory source string and return a LintResult.");

  m.def(
      "lint_file",
      [](const std::string& path, const std::string& rules, int u_threshold,
         const std::string& min_confidence, const std::string& concepts) {
        std::string error;
        auto analysis = analyze_file(
            path,
            make_options(rules, u_threshold, min_confidence, concepts), 0,
            &error);
        if (!analysis.has_value()) throw std::runtime_error(error);
        return *analysis;
      },
      py::arg("path"), py::arg("rules") = "all", py::arg("u_threshold") = 3,
      py::arg("min_confidence") = "low", py::arg("concepts") = "",
      "Lint a file on disk and return a LintResult.");

  m.def("count_loc", [](const std::string& text) { return count_loc(text); },
        py::arg("text"), "Count non-blank lines.");

  m.def(
      "warnings_per_kloc",
      [](size_t warnings, size_t loc) { return warnings_per_kloc(warnings, loc); },
      py::arg("warnings"), py::arg("loc"),
      "warnings / (loc/1000) to one decimal; None when loc is 0.");

  m.def(
      "rate_increase_pct",
      [](double a, double b) { return rate_increase_pct(a, b); },
      py::arg("a_rate"), py::arg("b_rate"),
      "(a/b - 1) * 100 to one decimal; None when b is 0.");

  m.def(
      "analyze_corpus",
      [](const std::string& root, const std::string& rules, int u_threshold,
         const std::string& min_confidence, const std::string& concepts,
         unsigned jobs) {
        CorpusOptions options;
        options.analyzer =
            make_options(rules, u_threshold, min_confidence, concepts);
        options.jobs = jobs;
        std::string error;
        auto report = analyze_corpus(root, options, &error);
        if (!report.has_value()) throw std::runtime_error(error);
        return *report;
      },
      py::arg("root"), py::arg("rules") = "all", py::arg("u_threshold") = 3,
      py::arg("min_confidence") = "low", py::arg("concepts") = "",
      py::arg("jobs") = 0,
      "Analyze a corpus directory (one project per subdirectory).");

  m.def(
      "compare_corpora",
      [](const CorpusReport& a, const CorpusReport& b,
         std::optional<std::pair<size_t, size_t>> standard_counts) {
        std::optional<ExternalCounts> external;
        if (standard_counts.has_value()) {
          external = ExternalCounts{standard_counts->first,
                                    standard_counts->second};
        }
        return compare_corpora(a, b, external);
      },
      py::arg("a"), py::arg("b"), py::arg("standard_counts") = py::none(),
      "Compare two corpus reports; optional (a, b) external standard counts.");

  m.def("top_rules",
        [](const CorpusReport& report, size_t n) { return top_rules(report, n); },
        py::arg("report"), py::arg("n") = 3);

  m.def("rules", [] {
    py::list out;
    for (const RuleDescriptor& rule : rule_registry()) {
      py::dict entry;
      entry["letter"] = std::string(1, rule.letter);
      entry["name"] = std::string(rule.name);
      entry["description"] = std::string(rule.description);
      entry["concept_key"] = std::string(rule.concept_key);
      entry["syntax_rule"] = rule.syntax_rule;
      out.append(std::move(entry));
    }
    return out;
  }, "The implemented rule catalogue.");

  m.attr("__version__") = "0.1.0";
}
