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

#include "symmpoly/error.hpp"

namespace symmpoly {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid dimension";
    case ErrorKind::InvalidSize: return "invalid size";
    case ErrorKind::DegenerateEdge: return "degenerate edge";
    case ErrorKind::DegenerateTorsion: return "degenerate torsion";
    case ErrorKind::BoundUndefined: return "bound undefined";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Support: return "support error";
    case ErrorKind::Resolution: return "resolution error";
    case ErrorKind::Reliability: return "reliability error";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

}  // namespace symmpoly
