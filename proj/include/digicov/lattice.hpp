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

// Lattice points, k(t,n)-adjacency, finite digital images and their
// neighborhoods.

#ifndef DIGICOV_LATTICE_HPP
#define DIGICOV_LATTICE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "digicov/error.hpp"

namespace digicov {

using Coord = std::int64_t;

/// A point of Z^n. Ordered lexicographically.
struct Point {
  std::vector<Coord> coords;

  Point() = default;
  explicit Point(std::vector<Coord> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Coord> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  Coord operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    return std::lexicographical_compare_three_way(
        a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
  }
};

inline std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << to_string(p);
}

/// Number of k(t,n)-neighbors of a lattice point: sum_{i=1..t} 2^i C(n,i).
/// Throws DomainError unless 1 <= t <= n, or when the value overflows.
inline std::int64_t k_value(int t, int n) {
  if (n < 1 || t < 1 || t > n) {
    throw DomainError("k_value: need 1 <= t <= n, got t=" + std::to_string(t) +
                      " n=" + std::to_string(n));
  }
  // 3^n - 1 is the largest value; 3^39 still fits in int64.
  if (n > 39) throw DomainError("k_value: dimension too large");
  std::int64_t total = 0;
  std::int64_t binom = 1;  // C(n, i)
  std::int64_t pow2 = 1;
  for (int i = 1; i <= t; ++i) {
    binom = binom * (n - i + 1) / i;
    pow2 *= 2;
    total += pow2 * binom;
  }
  return total;
}

/// The k(t,n)-adjacency on Z^n. Two kinds compare equal iff (t,n) agree;
/// k is derived and cached, since e.g. k(2,2) = k(1,4) = 8.
class AdjacencyKind {
 public:
  AdjacencyKind(int t, int n) : t_(t), n_(n), k_(k_value(t, n)) {}

  int t() const { return t_; }
  int n() const { return n_; }
  std::int64_t k() const { return k_; }

  friend bool operator==(const AdjacencyKind& a, const AdjacencyKind& b) {
    return a.t_ == b.t_ && a.n_ == b.n_;
  }

 private:
  int t_;
  int n_;
  std::int64_t k_;
};

inline std::string to_string(const AdjacencyKind& kind) {
  return "k(" + std::to_string(kind.t()) + "," + std::to_string(kind.n()) +
         ")=" + std::to_string(kind.k());
}

/// p and q are distinct, every coordinate differs by at most one, and at most
/// t coordinates differ.
inline bool adjacent(const Point& p, const Point& q, const AdjacencyKind& kind) {
  const auto n = static_cast<std::size_t>(kind.n());
  if (p.dim() != n || q.dim() != n) {
    throw DomainError("adjacent: point dimension does not match " +
                      to_string(kind));
  }
  int differing = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Coord d = p[i] - q[i];
    if (d < -1 || d > 1) return false;
    if (d != 0) ++differing;
  }
  return differing >= 1 && differing <= kind.t();
}

/// All offsets in {-1,0,1}^n with between 1 and t nonzero entries, in
/// lexicographic order.
inline std::vector<std::vector<Coord>> adjacency_offsets(const AdjacencyKind& kind) {
  std::vector<std::vector<Coord>> out;
  std::vector<Coord> cur(static_cast<std::size_t>(kind.n()), -1);
  while (true) {
    const auto nz = std::count_if(cur.begin(), cur.end(), [](Coord c) { return c != 0; });
    if (nz >= 1 && nz <= kind.t()) out.push_back(cur);
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == 1) cur[--i] = -1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

class DigitalImage;

/// N_k(x,1): x together with every image point adjacent to it.
struct Neighborhood {
  Point center;
  std::vector<Point> members;  // sorted, contains center

  bool contains(const Point& p) const {
    return std::binary_search(members.begin(), members.end(), p);
  }
  std::size_t size() const { return members.size(); }
};

/// A finite set X of Z^n together with a k(t,n)-adjacency.
///
/// Points are kept sorted, and a point is addressed either by value or by
/// its index into points(). Closed neighborhoods are precomputed as sorted
/// index lists. Copies share the immutable state.
class DigitalImage {
 public:
  using Index = std::uint32_t;

  DigitalImage(AdjacencyKind kind, std::vector<Point> points)
      : data_(std::make_shared<Data>(Data{kind, std::move(points), {}})) {
    auto& pts = data_->points;
    const auto n = static_cast<std::size_t>(kind.n());
    for (const auto& p : pts) {
      if (p.dim() != n) {
        throw DomainError("digital image: point " + to_string(p) +
                          " does not have dimension " + std::to_string(n));
      }
    }
    std::sort(pts.begin(), pts.end());
    if (auto it = std::adjacent_find(pts.begin(), pts.end()); it != pts.end()) {
      throw DomainError("digital image: duplicate point " + to_string(*it));
    }
    build_neighborhoods();
  }

  DigitalImage(int t, int dim, std::vector<Point> points)
      : DigitalImage(AdjacencyKind(t, dim), std::move(points)) {}

  int dim() const { return data_->kind.n(); }
  const AdjacencyKind& kind() const { return data_->kind; }
  const std::vector<Point>& points() const { return data_->points; }
  std::size_t size() const { return data_->points.size(); }
  bool empty() const { return data_->points.empty(); }
  const Point& point(Index i) const { return data_->points[i]; }

  bool contains(const Point& p) const { return find(p).has_value(); }

  std::optional<Index> find(const Point& p) const {
    const auto& pts = data_->points;
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || *it != p) return std::nullopt;
    return static_cast<Index>(it - pts.begin());
  }

  Index index_of(const Point& p) const {
    if (auto i = find(p)) return *i;
    throw DomainError("point " + to_string(p) + " is not in the image");
  }

  /// Sorted indices of N(x,1), including x itself.
  std::span<const Index> closed_neighborhood(Index i) const {
    return data_->closed[i];
  }

  bool adjacent_at(Index i, Index j) const {
    if (i == j) return false;
    const auto& nb = data_->closed[i];
    return std::binary_search(nb.begin(), nb.end(), j);
  }

  /// True when j is in N(i,1).
  bool in_closed_neighborhood(Index i, Index j) const {
    const auto& nb = data_->closed[i];
    return std::binary_search(nb.begin(), nb.end(), j);
  }

  /// Identity comparison: same kind and same point set.
  friend bool operator==(const DigitalImage& a, const DigitalImage& b) {
    return a.data_ == b.data_ ||
           (a.kind() == b.kind() && a.points() == b.points());
  }

 private:
  struct Data {
    AdjacencyKind kind;
    std::vector<Point> points;
    std::vector<std::vector<Index>> closed;
  };

  void build_neighborhoods() {
    auto& d = *data_;
    d.closed.assign(d.points.size(), {});
    const std::size_t n = d.points.size();
    // Probe lattice offsets when that is cheaper than a pairwise scan.
    const bool probe = d.kind.n() <= 12 && d.kind.k() < static_cast<std::int64_t>(n);
    if (probe) {
      const auto offsets = adjacency_offsets(d.kind);
      Point q;
      for (std::size_t i = 0; i < n; ++i) {
        auto& nb = d.closed[i];
        nb.push_back(static_cast<Index>(i));
        for (const auto& off : offsets) {
          q.coords = d.points[i].coords;
          for (std::size_t a = 0; a < off.size(); ++a) q.coords[a] += off[a];
          if (auto j = find(q)) nb.push_back(*j);
        }
        std::sort(nb.begin(), nb.end());
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) d.closed[i].push_back(static_cast<Index>(i));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (adjacent(d.points[i], d.points[j], d.kind)) {
            d.closed[i].push_back(static_cast<Index>(j));
            d.closed[j].push_back(static_cast<Index>(i));
          }
        }
      }
      for (auto& nb : d.closed) std::sort(nb.begin(), nb.end());
    }
  }

  std::shared_ptr<Data> data_;
};

/// N_k(x,1) in X. Throws DomainError when x is not a point of X.
inline Neighborhood neighborhood(const DigitalImage& image, const Point& x) {
  const auto i = image.index_of(x);
  Neighborhood out{x, {}};
  for (auto j : image.closed_neighborhood(i)) out.members.push_back(image.point(j));
  return out;
}

/// Partition into maximal k-connected subsets, each block sorted, blocks
/// ordered by their smallest point.
inline std::vector<std::vector<Point>> components(const DigitalImage& image) {
  using Index = DigitalImage::Index;
  const std::size_t n = image.size();
  std::vector<int> block(n, -1);
  std::vector<std::vector<Point>> out;
  std::vector<Index> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (block[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    block[s] = id;
    stack.assign(1, static_cast<Index>(s));
    std::vector<Index> members;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (auto w : image.closed_neighborhood(v)) {
        if (block[w] < 0) {
          block[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    for (auto v : members) out.back().push_back(image.point(v));
  }
  return out;
}

/// k-connectedness via k-paths. Throws DomainError on the empty image.
inline bool is_connected(const DigitalImage& image) {
  if (image.empty()) throw DomainError("is_connected: empty image");
  return components(image).size() == 1;
}

/// The subset S of an image as a digital image with the same adjacency kind.
inline DigitalImage sub_image(const DigitalImage& image, std::vector<Point> subset) {
  for (const auto& p : subset) {
    if (!image.contains(p)) {
      throw DomainError("sub_image: " + to_string(p) + " is not in the image");
    }
  }
  return DigitalImage(image.kind(), std::move(subset));
}

}  // namespace digicov

#endif  // DIGICOV_LATTICE_HPP
