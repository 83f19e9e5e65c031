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

// Concrete fixtures: simple closed k-curves, integer windows, the wrap map
// t -> x_{t mod l} and cyclic covers between curves.

#ifndef DIGICOV_CATALOG_HPP
#define DIGICOV_CATALOG_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "digicov/lattice.hpp"
#include "digicov/morphism.hpp"

namespace digicov {

/// SC_k^{n,l}: points x_0..x_{l-1}, l >= 4, with x_i ~ x_j exactly when
/// i and j are cyclically consecutive.
struct SimpleClosedCurve {
  DigitalImage image;
  std::vector<Point> order;

  std::size_t length() const { return order.size(); }
  const Point& at(std::size_t i) const { return order[i % order.size()]; }
};

/// Thrown by validate_scc when the adjacency pattern is wrong; i < j are the
/// offending indices.
class CurveError : public DomainError {
 public:
  CurveError(const std::string& what, std::size_t i, std::size_t j)
      : DomainError(what), i_(i), j_(j) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

inline SimpleClosedCurve validate_scc(std::vector<Point> points, const AdjacencyKind& kind) {
  const std::size_t l = points.size();
  if (l < 4) {
    throw DomainError("simple closed curve needs at least 4 points, got " + std::to_string(l));
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      if (points[i] == points[j]) {
        throw CurveError("simple closed curve: x_" + std::to_string(i) + " and x_" +
                             std::to_string(j) + " coincide",
                         i, j);
      }
      const bool consecutive = j == i + 1 || (i == 0 && j == l - 1);
      const bool adj = adjacent(points[i], points[j], kind);
      if (consecutive && !adj) {
        throw CurveError("simple closed curve: consecutive x_" + std::to_string(i) + "=" +
                             to_string(points[i]) + " and x_" + std::to_string(j) + "=" +
                             to_string(points[j]) + " are not adjacent",
                         i, j);
      }
      if (!consecutive && adj) {
        throw CurveError("simple closed curve: non-consecutive x_" + std::to_string(i) + "=" +
                             to_string(points[i]) + " and x_" + std::to_string(j) + "=" +
                             to_string(points[j]) + " are adjacent",
                         i, j);
      }
    }
  }
  DigitalImage image(kind, points);
  return {std::move(image), std::move(points)};
}

struct CatalogEntry {
  std::string_view name;
  int t;
  int n;
  std::vector<Point> order;
};

/// Built-in curves, named sc<k>-<n>-<l>. Each is oriented so that x_{l-1}
/// precedes x_1 lexicographically.
inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"sc4-2-4", 1, 2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}},
      {"sc8-2-4", 2, 2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}},
      {"sc26-3-5", 3, 3, {{0, 0, 1}, {1, 0, 2}, {2, 1, 1}, {1, 2, 0}, {0, 1, 0}}},
      {"sc8-2-6", 2, 2, {{0, 1}, {1, 0}, {2, 1}, {2, 2}, {1, 3}, {0, 2}}},
      {"sc8-2-7", 2, 2, {{0, 1}, {1, 0}, {2, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 2}}},
      {"sc4-2-8", 1, 2, {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}},
      {"sc8-2-8",
       2,
       2,
       {{2, 0}, {1, 1}, {0, 2}, {-1, 1}, {-2, 0}, {-1, -1}, {0, -2}, {1, -1}}},
  };
  return entries;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) out.emplace_back(e.name);
  return out;
}

/// Looks up a built-in curve. A well-formed name with l < 4 is rejected as
/// such; any other miss is an unknown name.
inline SimpleClosedCurve scc_catalog(std::string_view name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return validate_scc(e.order, AdjacencyKind(e.t, e.n));
  }
  if (name.rfind("sc", 0) == 0) {
    const auto dash = name.rfind('-');
    if (dash != std::string_view::npos && dash + 1 < name.size()) {
      const auto tail = name.substr(dash + 1);
      if (std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
          tail.size() < 9 && std::stoi(std::string(tail)) < 4) {
        throw DomainError("curve '" + std::string(name) + "': l must be at least 4");
      }
    }
  }
  throw DomainError("unknown curve '" + std::string(name) + "'");
}

/// [a,b] of Z with 2-adjacency.
inline DigitalImage interval_image(Coord a, Coord b) {
  if (a > b) throw DomainError("interval_image: empty interval");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(b - a + 1));
  for (Coord t = a; t <= b; ++t) pts.push_back(Point{t});
  return DigitalImage(1, 1, std::move(pts));
}

/// Window length used when none is given: three full periods.
inline Coord default_window_end(std::size_t l) { return 3 * static_cast<Coord>(l); }

/// [0, window_end] -> curve, t -> x_{t mod l}. The window must reach x_{l-1}.
inline DigitalMap wrap_map(const SimpleClosedCurve& curve, Coord window_end) {
  const auto l = static_cast<Coord>(curve.length());
  if (window_end < l - 1) {
    throw DomainError("wrap_map: window [0," + std::to_string(window_end) +
                      "] does not cover all " + std::to_string(l) + " curve points");
  }
  auto window = interval_image(0, window_end);
  std::vector<DigitalMap::Index> assignment;
  assignment.reserve(window.size());
  for (Coord t = 0; t <= window_end; ++t) {
    assignment.push_back(curve.image.index_of(curve.at(static_cast<std::size_t>(t % l))));
  }
  return DigitalMap(std::move(window), curve.image, std::move(assignment));
}

/// x_i -> y_{i mod small.l}; big.l must be a multiple of small.l.
inline DigitalMap cyclic_cover(const SimpleClosedCurve& big, const SimpleClosedCurve& small) {
  if (big.length() % small.length() != 0) {
    throw DomainError("cyclic_cover: length " + std::to_string(big.length()) +
                      " is not a multiple of " + std::to_string(small.length()));
  }
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t i = 0; i < big.length(); ++i) pairs.emplace_back(big.at(i), small.at(i));
  return DigitalMap::from_pairs(big.image, small.image, pairs);
}

}  // namespace digicov

#endif  // DIGICOV_CATALOG_HPP
