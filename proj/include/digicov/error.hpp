// Copyright 2026 The digicov Authors
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

#ifndef DIGICOV_ERROR_HPP
#define DIGICOV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace digicov {

/// Raised when an operation is called outside its domain (bad dimension,
/// point not in image, malformed map, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the enumerators when a search space exceeds its ceiling.
class CeilingExceeded : public std::runtime_error {
 public:
  explicit CeilingExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace digicov

#endif  // DIGICOV_ERROR_HPP
