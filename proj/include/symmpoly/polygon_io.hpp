/*
   Copyright 2026 The symmpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symmpoly/polygon.hpp"

namespace symmpoly {

// One polygon per line:
//   {"dim": 2|3, "closed": true|false, "edges": [[x,y(,z)], ...]}
// Coordinates are written with 17 significant digits, so a write/read round
// trip reproduces every double exactly.

std::string to_jsonl(const Polygon& p);

/// Parses one record; `line_number` (1-based) is used in error messages.
Polygon parse_jsonl_record(const std::string& line, std::size_t line_number);

void write_ensemble(std::ostream& out, const std::vector<Polygon>& polygons);
void write_ensemble(const std::string& path, const std::vector<Polygon>& polygons);

/// Blank lines are skipped; an empty file yields an empty list.
std::vector<Polygon> read_ensemble(std::istream& in);
std::vector<Polygon> read_ensemble(const std::string& path);

}  // namespace symmpoly
