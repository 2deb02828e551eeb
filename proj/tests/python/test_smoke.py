# Copyright 2026 The novice-lint Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the novlint extension module."""

import json

import pytest

novlint = pytest.importorskip("novlint")

PROMPT_LOOP = """\
class Quiz {
    void run() {
        char reply;
        char Y;
        do {
            System.out.println("Do you want to continue?");
            reply = (char) System.in.read();
        } while (reply != Y);
    }
}
"""

CLEAN = """\
class Clean {
    int twice(int x) {
        return x * 2;
    }
}
"""


def test_lint_source_finds_the_char_literal_mixup():
    result = novlint.lint_source(PROMPT_LOOP, path="Quiz.java")
    assert [d.rule_letter for d in result.diagnostics] == ["S"]
    diag = result.diagnostics[0]
    assert diag.span.start_line == 8
    assert "'Y'" in diag.message
    assert diag.suggestions
    assert diag.concept.display_name
    assert diag.confidence == "high"


def test_clean_source_is_silent():
    result = novlint.lint_source(CLEAN, path="Clean.java")
    assert result.diagnostics == []
    assert result.events == []
    assert result.loc == 5


def test_recovery_events_are_exposed():
    result = novlint.lint_source(
        "class A { void m(int n) { for (int i = 0, i < n, i++) { } } }"
    )
    kinds = [e.kind for e in result.events]
    assert kinds == ["comma_in_for_header", "comma_in_for_header"]
    assert [d.rule_letter for d in result.diagnostics] == ["F", "F"]


def test_rule_selection_and_validation():
    result = novlint.lint_source(PROMPT_LOOP, rules="novice")
    assert [d.rule_letter for d in result.diagnostics] == ["S"]
    with pytest.raises(ValueError):
        novlint.lint_source(PROMPT_LOOP, rules="Z")


def test_metrics_match_the_documented_rates():
    assert novlint.count_loc("a\n\nb\n") == 2
    assert novlint.warnings_per_kloc(592, 89056) == 6.6
    assert novlint.warnings_per_kloc(16, 6485) == 2.5
    assert novlint.warnings_per_kloc(5, 0) is None
    assert novlint.rate_increase_pct(6.6, 2.5) == 164.0


def test_json_rendering_parses():
    result = novlint.lint_source(PROMPT_LOOP, path="Quiz.java")
    doc = json.loads(result.to_json())
    assert doc["version"] == 1
    assert len(doc["diagnostics"]) == 1
    assert doc["diagnostics"][0]["rule_letter"] == "S"


def test_corpus_analysis(tmp_path):
    project = tmp_path / "p1"
    project.mkdir()
    (project / "Quiz.java").write_text(PROMPT_LOOP)
    (project / "Clean.java").write_text(CLEAN)
    report = novlint.analyze_corpus(str(tmp_path))
    assert report.total_warnings == 1
    assert report.projects[0].project_id == "p1"
    assert report.per_rule_counts == {"S": 1}
    top = report.top_rules(3)
    assert top[0].rule == "S"

    comparison = novlint.compare_corpora(report, report)
    assert comparison.increase_pct == 0.0


def test_rule_catalogue():
    rules = novlint.rules()
    assert len(rules) == 19
    letters = {r["letter"] for r in rules}
    assert letters == set("ABCDEFGHJKLNSTUVWXY")
