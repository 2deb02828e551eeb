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

#ifndef NOVLINT_SOURCE_HPP
#define NOVLINT_SOURCE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace novlint {

// A half-open byte range inside one file, with 1-based line/column endpoints.
// end_col points one past the last byte of the range, so a one-character span
// at column 16 has start_col 16 and end_col 17.
struct Span {
  uint32_t file_id = 0;
  uint32_t start_line = 1;
  uint32_t start_col = 1;
  uint32_t end_line = 1;
  uint32_t end_col = 1;
  uint32_t byte_start = 0;
  uint32_t byte_end = 0;

  bool operator==(const Span&) const = default;

  // True when `inner` lies inside this span (same file, nested byte range).
  bool contains(const Span& inner) const {
    return file_id == inner.file_id && byte_start <= inner.byte_start &&
           inner.byte_end <= byte_end;
  }

  // Smallest span covering both inputs. Both must be in the same file.
  static Span join(const Span& a, const Span& b) {
    Span s = a.byte_start <= b.byte_start ? a : b;
    const Span& e = a.byte_end >= b.byte_end ? a : b;
    s.end_line = e.end_line;
    s.end_col = e.end_col;
    s.byte_end = e.byte_end;
    return s;
  }
};

// One source file: raw bytes plus a line index for offset <-> position
// translation. Tokens and AST nodes hold views into `text()`, so a SourceFile
// must outlive everything lexed or parsed from it.
class SourceFile {
 public:
  SourceFile(uint32_t id, std::string path, std::string text);

  uint32_t id() const { return id_; }
  const std::string& path() const { return path_; }
  const std::string& text() const { return text_; }
  size_t size() const { return text_.size(); }

  uint32_t line_count() const {
    return static_cast<uint32_t>(line_starts_.size());
  }

  // 1-based (line, column) of a byte offset; offsets past the end clamp.
  std::pair<uint32_t, uint32_t> line_col(size_t byte) const;

  // Contents of a 1-based line, without the trailing newline.
  std::string_view line_text(uint32_t line) const;

  std::string_view slice(const Span& span) const {
    size_t lo = std::min<size_t>(span.byte_start, text_.size());
    size_t hi = std::min<size_t>(span.byte_end, text_.size());
    return std::string_view(text_).substr(lo, hi - lo);
  }

 private:
  uint32_t id_;
  std::string path_;
  std::string text_;
  std::vector<uint32_t> line_starts_;
};

}  // namespace novlint

#endif  // NOVLINT_SOURCE_HPP
