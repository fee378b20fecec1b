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

#include <stdexcept>
#include <string>

namespace symmpoly {

enum class ErrorKind {
  InvalidDimension,
  InvalidSize,
  DegenerateEdge,
  DegenerateTorsion,
  BoundUndefined,
  Domain,
  Support,
  Resolution,
  Reliability,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. The kind lets callers (and the CLI)
/// distinguish usage errors from probability-zero geometric degeneracies.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace symmpoly
