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

#pragma once

#include <iosfwd>
#include <vector>

#include "coldbench/workload/workload.hpp"

namespace coldbench {

// Newline-delimited request stream. Header "request_id,op,priority,issue_offset_us,file_ids...";
// each row lists its file ids as trailing comma-separated fields.
void WriteRequests(const std::vector<Request>& requests, std::ostream& out);
// Throws std::runtime_error on malformed rows.
std::vector<Request> ReadRequests(std::istream& in);

}  // namespace coldbench
