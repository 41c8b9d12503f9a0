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

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsearch {

// A searchable space: `size` candidates addressed by dense indices
// [0, size). decode maps an index to a candidate; encode is its inverse and
// throws std::domain_error for candidates outside the space. qubit_width is
// the register needed to index the space, which may exceed what the dense
// simulator accepts; running is where that gets rejected, not construction.
template <class Candidate>
struct Domain {
  std::uint64_t size = 0;
  int qubit_width = 0;
  std::string label;
  std::function<Candidate(std::uint64_t)> decode;
  std::function<std::uint64_t(const Candidate&)> encode;
};

// Candidates that are their own indices (board cells, raw positions).
inline Domain<std::uint64_t> index_domain(std::uint64_t size,
                                          std::string label = "index") {
  if (size < 1) throw std::domain_error("domain needs at least one candidate");
  Domain<std::uint64_t> domain;
  domain.size = size;
  domain.qubit_width = 1;
  while ((std::uint64_t{1} << domain.qubit_width) < size) ++domain.qubit_width;
  domain.label = std::move(label);
  domain.decode = [size](std::uint64_t index) {
    if (index >= size) {
      throw std::out_of_range("index " + std::to_string(index) +
                              " outside domain of " + std::to_string(size));
    }
    return index;
  };
  domain.encode = [size](const std::uint64_t& value) {
    if (value >= size) {
      throw std::domain_error("value " + std::to_string(value) +
                              " outside domain of " + std::to_string(size));
    }
    return value;
  };
  return domain;
}

}  // namespace qsearch
