// Copyright 2026 The qsearch Authors
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

#include <stdexcept>
#include <string>

namespace qsearch {

// Raised when a request is well-formed but exceeds what this process can
// represent or simulate (qubit caps, factorial overflow, grid orders whose
// search spaces cannot be enumerated). Distinct from std::domain_error, which
// covers arguments that are invalid at any scale.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a search completes correctly but the instance has no solution
// (for example 2x2 magic squares). Callers that print reports map this to a
// dedicated exit code rather than treating it as a failure.
class no_solution_error : public std::runtime_error {
 public:
  explicit no_solution_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qsearch
