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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "symmpoly/polygon_io.hpp"

using namespace symmpoly;

TEST_CASE("jsonl round trip") {
  SeedStream s(7, 20);
  std::vector<Polygon> polygons;
  for (int i = 0; i < 100; ++i) polygons.push_back(sample_pol(3, 12, s));
  std::stringstream buf;
  write_ensemble(buf, polygons);
  const auto back = read_ensemble(buf);
  REQUIRE(back.size() == polygons.size());
  double delta = 0;
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].closed());
    CHECK(back[i].dim() == 3);
    delta = std::max(delta, (back[i].edges() - polygons[i].edges()).cwiseAbs().maxCoeff());
  }
  CHECK(delta < 1e-15);
}

TEST_CASE("jsonl record format") {
  Eigen::MatrixXd e(2, 2);
  e << 1, -0.5, 0, 0.25;
  const std::string line = to_jsonl(Polygon(e, false));
  CHECK(line == R"({"dim": 2, "closed": false, "edges": [[1, 0], [-0.5, 0.25]]})");
}

TEST_CASE("jsonl empty and blank input") {
  std::istringstream empty("");
  CHECK(read_ensemble(empty).empty());
  std::istringstream blanks("\n\n{\"dim\": 2, \"closed\": true, \"edges\": [[1, 0], [-1, 0]]}\n\n");
  const auto p = read_ensemble(blanks);
  REQUIRE(p.size() == 1);
  CHECK(p[0].n() == 2);
}

TEST_CASE("jsonl errors name the line") {
  std::istringstream in(
      "{\"dim\": 2, \"closed\": true, \"edges\": [[1, 0], [-1, 0]]}\n"
      "{\"dim\": 4, \"closed\": true, \"edges\": [[1, 0, 0, 0]]}\n");
  try {
    read_ensemble(in);
    FAIL("expected a parse error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Parse);
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_jsonl_record("not json", 1), Error);
  CHECK_THROWS_AS(parse_jsonl_record(R"({"dim": 3, "closed": true, "edges": [[1, 0]]})", 1), Error);
  CHECK_THROWS_AS(parse_jsonl_record(R"({"dim": 2, "edges": [[1, 0]]})", 1), Error);
}

TEST_CASE("jsonl files") {
  const auto path = (std::filesystem::temp_directory_path() / "symmpoly_io_test.jsonl").string();
  SeedStream s(7, 21);
  const std::vector<Polygon> polygons{sample_arm(2, 5, s), sample_arm(2, 5, s)};
  write_ensemble(path, polygons);
  const auto back = read_ensemble(path);
  REQUIRE(back.size() == 2);
  CHECK(back[1].edges() == polygons[1].edges());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_ensemble(path), Error);
}
