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

#ifndef DIGICOV_TESTS_SUPPORT_HPP
#define DIGICOV_TESTS_SUPPORT_HPP

#include <vector>

#include "digicov/morphism.hpp"
#include "naive_definitions.hpp"

namespace test_support {

inline naive::Image to_naive(const digicov::DigitalImage& img) {
  return {naive::PointSet(img.points().begin(), img.points().end()), img.kind()};
}

inline naive::PointMap to_naive(const digicov::DigitalMap& f) {
  naive::PointMap out;
  for (const auto& [x, y] : f.pairs()) out.emplace(x, y);
  return out;
}

inline naive::Classification naive_classify(const digicov::DigitalMap& f) {
  return naive::classify(to_naive(f.source()), to_naive(f.target()), to_naive(f));
}

/// Integer points of Z as 1-d points.
inline std::vector<digicov::Point> chain(std::initializer_list<digicov::Coord> ts) {
  std::vector<digicov::Point> out;
  for (auto t : ts) out.push_back(digicov::Point{t});
  return out;
}

inline digicov::DigitalImage diamond() {
  return digicov::DigitalImage(2, 2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

}  // namespace test_support

#endif  // DIGICOV_TESTS_SUPPORT_HPP
