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

#include "symmpoly/polygon_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace symmpoly {
namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string to_jsonl(const Polygon& p) {
  std::string out = "{\"dim\": ";
  out += std::to_string(p.dim());
  out += ", \"closed\": ";
  out += p.closed() ? "true" : "false";
  out += ", \"edges\": [";
  for (Eigen::Index i = 0; i < p.n(); ++i) {
    if (i > 0) out += ", ";
    out += '[';
    for (int d = 0; d < p.dim(); ++d) {
      if (d > 0) out += ", ";
      append_double(out, p.edges()(d, i));
    }
    out += ']';
  }
  out += "]}";
  return out;
}

Polygon parse_jsonl_record(const std::string& line, std::size_t line_number) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(line_number, e.what());
  }
  if (!j.is_object()) parse_fail(line_number, "record is not an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) parse_fail(line_number, "missing integer 'dim'");
  if (!j.contains("closed") || !j["closed"].is_boolean()) parse_fail(line_number, "missing boolean 'closed'");
  if (!j.contains("edges") || !j["edges"].is_array()) parse_fail(line_number, "missing array 'edges'");

  const int dim = j["dim"].get<int>();
  if (dim != 2 && dim != 3) parse_fail(line_number, "dim must be 2 or 3");
  const auto& edges = j["edges"];
  if (edges.empty()) parse_fail(line_number, "no edges");

  Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != static_cast<std::size_t>(dim)) {
      parse_fail(line_number, "edge " + std::to_string(i) + " has wrong arity");
    }
    for (int d = 0; d < dim; ++d) {
      if (!e[d].is_number()) parse_fail(line_number, "non-numeric coordinate");
      m(d, static_cast<Eigen::Index>(i)) = e[d].get<double>();
    }
  }
  return Polygon(std::move(m), j["closed"].get<bool>());
}

void write_ensemble(std::ostream& out, const std::vector<Polygon>& polygons) {
  for (const Polygon& p : polygons) out << to_jsonl(p) << '\n';
}

void write_ensemble(const std::string& path, const std::vector<Polygon>& polygons) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Parse, "cannot open '" + path + "' for writing");
  write_ensemble(out, polygons);
}

std::vector<Polygon> read_ensemble(std::istream& in) {
  std::vector<Polygon> polygons;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    polygons.push_back(parse_jsonl_record(line, line_number));
  }
  return polygons;
}

std::vector<Polygon> read_ensemble(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  return read_ensemble(in);
}

}  // namespace symmpoly
