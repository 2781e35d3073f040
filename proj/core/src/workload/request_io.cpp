// Copyright 2026 The ColdBench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coldbench/workload/request_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace coldbench {
namespace {

constexpr std::string_view kHeader = "request_id,op,priority,issue_offset_us,file_ids...";

template <typename T>
T ParseNumber(std::string_view field, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error(fmt::format("request line {}: '{}' is not a number", line, field));
  }
  return value;
}

}  // namespace

void WriteRequests(const std::vector<Request>& requests, std::ostream& out) {
  out << kHeader << '\n';
  for (const Request& r : requests) {
    out << r.request_id << ',' << ToString(r.op) << ',' << r.priority << ',' << r.issue_offset;
    for (FileId id : r.file_ids) out << ',' << id;
    out << '\n';
  }
}

std::vector<Request> ReadRequests(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("request stream is missing its header");
  }
  std::vector<Request> requests;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() < 5) {
      throw std::runtime_error(fmt::format("request line {}: expected at least one file id", line_no));
    }
    Request r;
    r.request_id = ParseNumber<std::uint64_t>(fields[0], line_no);
    try {
      r.op = ParseOp(fields[1]);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(fmt::format("request line {}: {}", line_no, e.what()));
    }
    r.priority = std::string(fields[2]);
    r.issue_offset = ParseNumber<SimTime>(fields[3], line_no);
    for (std::size_t i = 4; i < fields.size(); ++i) {
      r.file_ids.push_back(ParseNumber<FileId>(fields[i], line_no));
    }
    requests.push_back(std::move(r));
  }
  return requests;
}

}  // namespace coldbench
