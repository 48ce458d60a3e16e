// Copyright 2026 The msr Authors
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

// Trace ingestion and emission.
//
// The wire format is CSV with the exact header
// `timestamp,subject,attribute,value`, one sample per row, UTF-8, LF or
// CRLF line endings.  Rows may arrive in any order; after sorting, each
// (subject, attribute) series must have strictly increasing timestamps.
// Reading is fail-closed: the first malformed row aborts the parse with its
// line number, unless skip_bad_rows is set, in which case offenders are
// dropped and reported in the result.

#ifndef MSR_CSV_HPP
#define MSR_CSV_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "msr/errors.hpp"
#include "msr/io_util.hpp"
#include "msr/types.hpp"

namespace msr {

inline constexpr const char* kTraceCsvHeader =
    "timestamp,subject,attribute,value";

// All series of one trace, keyed and iterated by (subject, attribute).
class TraceTable {
 public:
  using Key = std::pair<std::string, std::string>;

  void insert(SampleSeries series) {
    Key key{series.subject(), series.attribute()};
    if (key.first.empty() || key.second.empty()) {
      throw InputError("trace series needs a subject and an attribute");
    }
    if (series_.count(key) != 0) {
      throw InputError("duplicate trace series " + key.first + "/" +
                       key.second);
    }
    series_.emplace(std::move(key), std::move(series));
  }

  const SampleSeries* find(const std::string& subject,
                           const std::string& attribute) const {
    const auto it = series_.find(Key{subject, attribute});
    return it == series_.end() ? nullptr : &it->second;
  }

  const SampleSeries& at(const std::string& subject,
                         const std::string& attribute) const {
    const SampleSeries* s = find(subject, attribute);
    if (s == nullptr) {
      throw InputError("trace has no series " + subject + "/" + attribute);
    }
    return *s;
  }

  const std::map<Key, SampleSeries>& series() const { return series_; }
  std::size_t size() const { return series_.size(); }
  bool empty() const { return series_.empty(); }

 private:
  std::map<Key, SampleSeries> series_;
};

struct TraceReadOptions {
  bool skip_bad_rows = false;
};

struct TraceReadResult {
  TraceTable table;
  // One "line N: reason" note per row dropped under skip_bad_rows.
  std::vector<std::string> skipped;
};

namespace detail {

inline bool parse_csv_double(const std::string& field, double& out) {
  const char* first = field.data();
  const char* last = first + field.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

}  // namespace detail

inline TraceReadResult read_trace_csv(const std::string& text,
                                      const TraceReadOptions& options = {}) {
  struct Row {
    double t;
    double v;
    std::size_t line;
  };
  std::map<TraceTable::Key, std::vector<Row>> rows;
  TraceReadResult result;

  const auto bad = [&](std::size_t line, const std::string& reason) {
    const std::string note = "line " + std::to_string(line) + ": " + reason;
    if (!options.skip_bad_rows) throw ParseError(note);
    result.skipped.push_back(note);
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    if (!saw_header) {
      if (line != kTraceCsvHeader) {
        throw ParseError("line 1: expected header \"" +
                         std::string(kTraceCsvHeader) + "\", got \"" + line +
                         "\"");
      }
      saw_header = true;
      continue;
    }

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (fields.size() != 4) {
      bad(line_no, "expected 4 fields, got " +
                       std::to_string(fields.size()));
      continue;
    }
    Row row{0.0, 0.0, line_no};
    if (!detail::parse_csv_double(fields[0], row.t)) {
      bad(line_no, "bad timestamp \"" + fields[0] + "\"");
      continue;
    }
    if (fields[1].empty() || fields[2].empty()) {
      bad(line_no, "empty subject or attribute");
      continue;
    }
    if (!detail::parse_csv_double(fields[3], row.v)) {
      bad(line_no, "bad value \"" + fields[3] + "\"");
      continue;
    }
    rows[TraceTable::Key{fields[1], fields[2]}].push_back(row);
  }
  if (!saw_header) throw ParseError("line 1: missing header");

  for (auto& [key, group] : rows) {
    std::stable_sort(group.begin(), group.end(),
                     [](const Row& a, const Row& b) { return a.t < b.t; });
    SampleSeries series(key.first, key.second);
    bool have_prev = false;
    double prev_t = 0.0;
    for (const Row& row : group) {
      if (have_prev && row.t == prev_t) {
        bad(row.line, "duplicate timestamp " + format_number(row.t) +
                          " for " + key.first + "/" + key.second);
        continue;
      }
      series.append(row.t, row.v);
      have_prev = true;
      prev_t = row.t;
    }
    if (!series.empty()) result.table.insert(std::move(series));
  }
  return result;
}

inline TraceReadResult read_trace_csv_file(
    const std::string& path, const TraceReadOptions& options = {}) {
  try {
    return read_trace_csv(read_file(path), options);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::string write_trace_csv(const TraceTable& table) {
  const auto check_name = [](const std::string& name) {
    if (name.find_first_of(",\r\n") != std::string::npos) {
      throw InputError("name \"" + name +
                       "\" cannot be written to CSV unescaped");
    }
  };
  std::string out = kTraceCsvHeader;
  out += "\n";
  for (const auto& [key, series] : table.series()) {
    check_name(key.first);
    check_name(key.second);
    for (const Sample& s : series.samples()) {
      out += format_number(s.t);
      out += ',';
      out += key.first;
      out += ',';
      out += key.second;
      out += ',';
      out += format_number(s.v);
      out += '\n';
    }
  }
  return out;
}

inline void write_trace_csv_file(const TraceTable& table,
                                 const std::string& path) {
  write_file(path, write_trace_csv(table));
}

}  // namespace msr

#endif  // MSR_CSV_HPP
