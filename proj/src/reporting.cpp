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

#include "novlint/reporting.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "novlint/rules.hpp"

namespace novlint {

namespace {

struct MessageEntry {
  std::string_view message;
  std::vector<std::string_view> suggestions;
};

// Catalog of message and suggestion templates, keyed by "<letter>:<variant>".
// Placeholders are {lower_case} names filled from the firing's captures.
const std::map<std::string, MessageEntry, std::less<>>& message_catalog() {
  static const std::map<std::string, MessageEntry, std::less<>> catalog = {
      {"A:default",
       {"'{code}' uses '=', which assigns instead of comparing. Did you mean "
        "'==' ?",
        {"write '==' instead of '=' so the condition compares the two sides"}}},
      {"B:eq",
       {"'==' asks whether these are the very same object, not whether the "
        "strings contain the same text. Did you mean .equals?",
        {"write {lhs}.equals({rhs}) to compare the contents"}}},
      {"B:neq",
       {"'!=' asks whether these are different objects, not whether the "
        "strings differ in content. Did you mean .equals?",
        {"write !{lhs}.equals({rhs}) to compare the contents"}}},
      {"D:default",
       {"Both sides of '{op}' are boolean, and '{op}' always evaluates both. "
        "Did you mean the short-circuit '{fix}'?",
        {"replace '{op}' with '{fix}'"}}},
      {"E:default",
       {"The ';' right after this '{keyword}' is its entire body, so the "
        "'{keyword}' does nothing and the code after it always runs.",
        {"remove the ';' so the following statement belongs to the "
         "'{keyword}'"}}},
      {"J:default",
       {"'{member}' is a method, so '{receiver}.{member}' without parentheses "
        "never calls it. Did you forget the '()'?",
        {"write {receiver}.{member}() to call the method"}}},
      {"N:string",
       {"'{call}' builds a new string and this statement throws it away; a "
        "string is never changed in place.",
        {"keep the result, for example: {receiver} = {call};"}}},
      {"N:default",
       {"'{call}' returns a value, but this statement discards it.",
        {"use the returned value, for example assign it to a variable"}}},
      {"S:literal",
       {"'{name}' is a char variable that never receives a value. Did you "
        "accidentally compare against the variable {name} when you meant the "
        "character literal '{name}'?",
        {"write the character literal '{name}' (in single quotes) instead of "
         "the variable"}}},
      {"S:default",
       {"'{name}' is a char variable that never receives a value, so this "
        "comparison cannot match anything meaningful. Did you mean a "
        "character literal here?",
        {"give '{name}' a value before using it in a comparison"}}},
      {"T:or",
       {"'{var} != null || ...' evaluates the right-hand side exactly when "
        "{var} IS null, so the call on {var} can still blow up. Did you "
        "accidentally mix up '||' and '&&'?",
        {"write '&&' so the null check protects the use of {var}"}}},
      {"T:and",
       {"'{var} == null && ...' uses {var} exactly when it is null. Did you "
        "accidentally mix up '&&' and '||'?",
        {"write '||' so the null case skips the use of {var}"}}},
      {"U:default",
       {"These {count} if/else branches all test '{var}' for equality. A "
        "switch on '{var}' expresses one-value-per-branch more directly.",
        {"rewrite the chain as 'switch ({var}) {...}' with one case per "
         "value"}}},
      {"V:single",
       {"The field '{name}' is only used inside '{method}'. A variable that a "
        "single method uses can usually live inside that method.",
        {"declare '{name}' as a local variable inside '{method}'"}}},
      {"V:single_final",
       {"The field '{name}' is only used inside '{method}'. A variable that a "
        "single method uses can usually live inside that method.",
        {"declare '{name}' as a local variable inside '{method}'",
         "or, if '{name}' is meant to be a constant, mark it final"}}},
      {"V:unused",
       {"The field '{name}' is never used anywhere in the class.",
        {"remove '{name}', or use it where it was intended"}}},
      {"W:default",
       {"Nothing ends this case, so after its statements control continues "
        "into the next case. Is that what you intended?",
        {"end the case with 'break;' (or a comment when falling through is "
         "deliberate)"}}},
      {"X:default",
       {"This switch has no 'default' case, so a value that matches no case "
        "is silently skipped.",
        {"add a 'default:' case, even if it only reports the unexpected "
         "value"}}},
      {"Y:default",
       {"'{var} <= {bound}' lets {var} reach {bound} itself, which is one "
        "past the last valid index. Did you mean '<'?",
        {"write '{var} < {bound}'"}}},

      // Parse-recovery rules.
      {"C:default",
       {"Expected {expected}, but found {found}. Brackets and quotes always "
        "come in matching pairs.",
        {}}},
      {"F:default",
       {"A for header separates its three parts with semicolons, but a ',' "
        "stands here. Did you mix up ',' and ';'?",
        {"replace the ',' with ';'"}}},
      {"G:default",
       {"The condition of this '{keyword}' is wrapped in curly brackets. "
        "Conditions go in parentheses; curly brackets delimit the body.",
        {"write '{keyword} (condition) { ... }'"}}},
      {"H:default",
       {"'{word}' is a reserved word of the language, so it cannot be used as "
        "a name. The parser expected {expected} here.",
        {"pick a name that is not a reserved word, for example '{word}Value'"}}},
      {"K:default",
       {"The ';' right after the header of '{name}' ends the declaration on "
        "the spot, leaving the method without a body of its own.",
        {"remove the ';' between the header of '{name}' and its body"}}},
      {"L:default",
       {"'=>' is not a comparison operator. Greater-than-or-equal is written "
        "'>='. Did you reverse the two characters?",
        {"write '>=' instead of '=>'"}}},
  };
  return catalog;
}

bool is_placeholder_char(char c) {
  return (c >= 'a' && c <= 'z') || c == '_';
}

std::string fill_template(
    std::string_view tmpl,
    const std::vector<std::pair<std::string, std::string>>& captures) {
  std::string out;
  out.reserve(tmpl.size());
  size_t i = 0;
  while (i < tmpl.size()) {
    char c = tmpl[i];
    if (c != '{') {
      out.push_back(c);
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < tmpl.size() && is_placeholder_char(tmpl[j])) ++j;
    if (j > i + 1 && j < tmpl.size() && tmpl[j] == '}') {
      std::string_view name = tmpl.substr(i + 1, j - i - 1);
      auto it = std::find_if(captures.begin(), captures.end(),
                             [&](const auto& kv) { return kv.first == name; });
      if (it == captures.end()) {
        throw std::logic_error("message template placeholder '{" +
                               std::string(name) + "}' has no capture");
      }
      out += it->second;
      i = j + 1;
      continue;
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

const SourceFile* file_for(const std::vector<const SourceFile*>& files,
                           uint32_t file_id) {
  for (const SourceFile* f : files) {
    if (f != nullptr && f->id() == file_id) return f;
  }
  return nullptr;
}

}  // namespace

const char* confidence_name(Confidence c) {
  return c == Confidence::High ? "high" : "low";
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.span.file_id != b.span.file_id)
                       return a.span.file_id < b.span.file_id;
                     if (a.span.byte_start != b.span.byte_start)
                       return a.span.byte_start < b.span.byte_start;
                     if (a.rule_letter != b.rule_letter)
                       return a.rule_letter < b.rule_letter;
                     return a.span.byte_end < b.span.byte_end;
                   });
}

Diagnostic compose(const RuleFiring& firing, const ConceptMap& concepts) {
  const RuleDescriptor* rule = find_rule(firing.letter);
  if (rule == nullptr) {
    throw std::logic_error(std::string("unknown rule letter '") +
                           firing.letter + "' in firing");
  }
  std::string key = std::string(1, firing.letter) + ":" + firing.variant;
  auto it = message_catalog().find(key);
  if (it == message_catalog().end()) {
    throw std::logic_error("no message catalog entry for " + key);
  }

  Diagnostic diag;
  diag.rule_letter = firing.letter;
  diag.rule_name = std::string(rule->name);
  diag.span = firing.span;
  diag.confidence = firing.confidence;
  diag.message = fill_template(it->second.message, firing.captures);
  for (std::string_view suggestion : it->second.suggestions) {
    diag.suggestions.push_back(fill_template(suggestion, firing.captures));
  }
  if (const ConceptRef* ref = concepts.find(rule->concept_key)) {
    diag.concept_ref = *ref;
  } else {
    diag.concept_ref.concept_key = std::string(rule->concept_key);
    diag.concept_ref.display_name = std::string(rule->concept_key);
  }
  return diag;
}

std::string render_text(const std::vector<Diagnostic>& diagnostics,
                        const std::vector<const SourceFile*>& files) {
  std::ostringstream out;
  bool first = true;
  for (const Diagnostic& diag : diagnostics) {
    if (!first) out << "\n";
    first = false;

    const SourceFile* file = file_for(files, diag.span.file_id);
    std::string path = file != nullptr ? file->path() : "<unknown>";
    out << path << ":" << diag.span.start_line << ":" << diag.span.start_col
        << "  [" << diag.rule_letter << "] " << diag.message << "\n";
    if (diag.confidence == Confidence::Low) {
      out << "  (low confidence)\n";
    }

    if (file != nullptr && diag.span.start_line <= file->line_count()) {
      std::string line(file->line_text(diag.span.start_line));
      for (char& c : line) {
        if (c == '\t') c = ' ';
      }
      std::string number = std::to_string(diag.span.start_line);
      std::string gutter(number.size() + 2, ' ');
      out << "  " << number << " | " << line << "\n";
      size_t caret_col = diag.span.start_col;
      size_t caret_end = diag.span.end_line == diag.span.start_line
                             ? diag.span.end_col
                             : line.size() + 1;
      caret_end = std::min(caret_end, line.size() + 1);
      size_t width = caret_end > caret_col ? caret_end - caret_col : 1;
      out << "  " << std::string(number.size(), ' ') << " | "
          << std::string(caret_col > 0 ? caret_col - 1 : 0, ' ')
          << std::string(width, '^') << "\n";
      (void)gutter;
    }

    for (const std::string& suggestion : diag.suggestions) {
      out << "  suggestion: " << suggestion << "\n";
    }
    out << "  concept: " << diag.concept_ref.display_name;
    if (diag.concept_ref.reading_reference.has_value()) {
      out << " (see: " << *diag.concept_ref.reading_reference << ")";
    }
    out << "\n";
  }
  return out.str();
}

namespace {

nlohmann::json span_to_json(const Span& span,
                            const std::vector<const SourceFile*>& files) {
  const SourceFile* file = file_for(files, span.file_id);
  nlohmann::json j;
  j["file"] = file != nullptr ? file->path() : "";
  j["start_line"] = span.start_line;
  j["start_col"] = span.start_col;
  j["end_line"] = span.end_line;
  j["end_col"] = span.end_col;
  j["byte_start"] = span.byte_start;
  j["byte_end"] = span.byte_end;
  return j;
}

}  // namespace

std::string render_json(const std::vector<Diagnostic>& diagnostics,
                        const std::vector<const SourceFile*>& files) {
  nlohmann::json root;
  root["version"] = 1;
  nlohmann::json file_array = nlohmann::json::array();
  for (const SourceFile* file : files) {
    if (file == nullptr) continue;
    nlohmann::json f;
    f["id"] = file->id();
    f["path"] = file->path();
    file_array.push_back(std::move(f));
  }
  root["files"] = std::move(file_array);

  nlohmann::json diag_array = nlohmann::json::array();
  for (const Diagnostic& diag : diagnostics) {
    nlohmann::json j;
    j["rule_letter"] = std::string(1, diag.rule_letter);
    j["rule_name"] = diag.rule_name;
    j["span"] = span_to_json(diag.span, files);
    j["message"] = diag.message;
    j["suggestions"] = diag.suggestions;
    nlohmann::json concept_json;
    concept_json["key"] = diag.concept_ref.concept_key;
    concept_json["display_name"] = diag.concept_ref.display_name;
    if (diag.concept_ref.reading_reference.has_value()) {
      concept_json["reading_reference"] = *diag.concept_ref.reading_reference;
    }
    j["concept"] = std::move(concept_json);
    j["confidence"] = confidence_name(diag.confidence);
    diag_array.push_back(std::move(j));
  }
  root["diagnostics"] = std::move(diag_array);
  return root.dump(2, ' ', false,
                   nlohmann::json::error_handler_t::replace) +
         "\n";
}

std::vector<Diagnostic> parse_diagnostics_json(const std::string& json_text) {
  nlohmann::json root = nlohmann::json::parse(json_text);
  std::map<std::string, uint32_t> id_by_path;
  if (root.contains("files")) {
    for (const auto& f : root["files"]) {
      id_by_path[f.at("path").get<std::string>()] = f.at("id").get<uint32_t>();
    }
  }
  std::vector<Diagnostic> out;
  for (const auto& j : root.at("diagnostics")) {
    Diagnostic d;
    d.rule_letter = j.at("rule_letter").get<std::string>().at(0);
    d.rule_name = j.at("rule_name").get<std::string>();
    const auto& s = j.at("span");
    auto file_it = id_by_path.find(s.at("file").get<std::string>());
    d.span.file_id = file_it != id_by_path.end() ? file_it->second : 0;
    d.span.start_line = s.at("start_line").get<uint32_t>();
    d.span.start_col = s.at("start_col").get<uint32_t>();
    d.span.end_line = s.at("end_line").get<uint32_t>();
    d.span.end_col = s.at("end_col").get<uint32_t>();
    d.span.byte_start = s.at("byte_start").get<uint32_t>();
    d.span.byte_end = s.at("byte_end").get<uint32_t>();
    d.message = j.at("message").get<std::string>();
    for (const auto& sug : j.at("suggestions")) {
      d.suggestions.push_back(sug.get<std::string>());
    }
    const auto& c = j.at("concept");
    d.concept_ref.concept_key = c.at("key").get<std::string>();
    d.concept_ref.display_name = c.at("display_name").get<std::string>();
    if (c.contains("reading_reference")) {
      d.concept_ref.reading_reference =
          c.at("reading_reference").get<std::string>();
    }
    d.confidence = j.at("confidence").get<std::string>() == "high"
                       ? Confidence::High
                       : Confidence::Low;
    out.push_back(std::move(d));
  }
  return out;
}

std::string render_csv(const std::vector<Diagnostic>& diagnostics,
                       const std::vector<const SourceFile*>& files) {
  std::ostringstream out;
  out << "file,line,col,rule,rule_name,confidence,message\n";
  for (const Diagnostic& diag : diagnostics) {
    const SourceFile* file = file_for(files, diag.span.file_id);
    std::string message = diag.message;
    std::string quoted;
    quoted.reserve(message.size() + 2);
    quoted.push_back('"');
    for (char c : message) {
      if (c == '"') quoted.push_back('"');
      quoted.push_back(c);
    }
    quoted.push_back('"');
    out << (file != nullptr ? file->path() : "") << ","
        << diag.span.start_line << "," << diag.span.start_col << ","
        << diag.rule_letter << "," << diag.rule_name << ","
        << confidence_name(diag.confidence) << "," << quoted << "\n";
  }
  return out.str();
}

}  // namespace novlint
