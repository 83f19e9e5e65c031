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

// Exhaustive enumeration of small connected digital images and the maps
// between them, used to test implications between the map predicates.

#ifndef DIGICOV_ORACLE_HPP
#define DIGICOV_ORACLE_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "digicov/covering.hpp"
#include "digicov/lattice.hpp"
#include "digicov/morphism.hpp"

namespace digicov {

struct EnumerationBounds {
  int max_points = 5;
  int dim = 2;  // dimensions 1..dim are enumerated
  int t = 2;    // adjacency parameters 1..min(t, dim)
  int box = 4;  // per-axis extent of the bounding box
  std::optional<std::uint64_t> max_maps_per_pair;
  std::uint64_t ceiling = 10'000'000;

  void validate() const {
    if (max_points < 1 || dim < 1 || t < 1 || box < 1) {
      throw DomainError("enumeration bounds must be positive");
    }
  }
};

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = saturating_mul(r, n - k + i);
    if (r == UINT64_MAX) return r;
    r /= i;
  }
  return r;
}

inline bool connected_indices(const DigitalImage& img) {
  return !img.empty() && components(img).size() == 1;
}

}  // namespace detail

/// Number of cell subsets enumerate_images inspects for one adjacency kind.
inline std::uint64_t image_search_size(const EnumerationBounds& bounds, int dim) {
  std::uint64_t cells = 1;
  for (int a = 0; a < dim; ++a) cells = detail::saturating_mul(cells, static_cast<std::uint64_t>(bounds.box));
  std::uint64_t total = 0;
  for (int s = 1; s <= bounds.max_points; ++s) {
    const auto c = detail::binomial(cells, static_cast<std::uint64_t>(s));
    total = c > UINT64_MAX - total ? UINT64_MAX : total + c;
  }
  return total;
}

/// All connected images of kind (t, dim) with at most max_points points
/// that fit in the bounding box, one per translation class. Each image is
/// translated so its smallest point is the origin. Ordered by size, then
/// by point list.
inline std::vector<DigitalImage> enumerate_images(const EnumerationBounds& bounds, int dim, int t) {
  bounds.validate();
  const AdjacencyKind kind(t, dim);
  if (image_search_size(bounds, dim) > bounds.ceiling) {
    throw CeilingExceeded("image enumeration: box of extent " + std::to_string(bounds.box) +
                          " in dimension " + std::to_string(dim) + " exceeds the ceiling");
  }
  std::vector<Point> cells;
  {
    std::vector<Coord> cur(static_cast<std::size_t>(dim), 0);
    while (true) {
      cells.emplace_back(cur);
      std::size_t i = cur.size();
      while (i > 0 && cur[i - 1] == bounds.box - 1) cur[--i] = 0;
      if (i == 0) break;
      ++cur[i - 1];
    }
  }
  std::set<std::vector<Point>> seen;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!pick.empty()) {
      std::vector<Point> pts;
      for (auto c : pick) pts.push_back(cells[c]);
      // cells are lexicographic, so pts[0] is the smallest point.
      const Point origin = pts[0];
      for (auto& p : pts) {
        for (std::size_t a = 0; a < p.coords.size(); ++a) p.coords[a] -= origin.coords[a];
      }
      if (!seen.count(pts) && detail::connected_indices(DigitalImage(kind, pts))) {
        seen.insert(std::move(pts));
      }
    }
    if (pick.size() == static_cast<std::size_t>(bounds.max_points)) return;
    for (std::size_t c = from; c < cells.size(); ++c) {
      pick.push_back(c);
      grow(c + 1);
      pick.pop_back();
    }
  };
  grow(0);
  std::vector<std::vector<Point>> sorted(seen.begin(), seen.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<DigitalImage> out;
  out.reserve(sorted.size());
  for (auto& pts : sorted) out.emplace_back(kind, std::move(pts));
  return out;
}

/// Every adjacency kind admitted by the bounds, dimension-major.
inline std::vector<DigitalImage> enumerate_images(const EnumerationBounds& bounds) {
  std::vector<DigitalImage> out;
  for (int dim = 1; dim <= bounds.dim; ++dim) {
    for (int t = 1; t <= std::min(bounds.t, dim); ++t) {
      auto part = enumerate_images(bounds, dim, t);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

/// Calls visit(assignment) for every surjection S -> T in lexicographic
/// order of the assignment vector, optionally only the continuous ones.
/// Continuity is enforced while extending partial assignments. Returns the
/// number of maps visited; throws CeilingExceeded past cap.
inline std::uint64_t for_each_surjection(
    const DigitalImage& source, const DigitalImage& target, bool continuous_only,
    const std::function<void(std::span<const DigitalImage::Index>)>& visit,
    std::optional<std::uint64_t> cap = std::nullopt) {
  using Index = DigitalImage::Index;
  const std::size_t ns = source.size();
  const std::size_t nt = target.size();
  if (nt == 0 || ns < nt) return 0;
  std::vector<Index> assign(ns, 0);
  std::vector<std::uint32_t> hits(nt, 0);
  std::size_t uncovered = nt;
  std::uint64_t count = 0;
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == ns) {
      if (uncovered == 0) {
        if (cap && count >= *cap) {
          throw CeilingExceeded("surjection enumeration exceeded " + std::to_string(*cap) +
                                " maps for one image pair");
        }
        ++count;
        visit(assign);
      }
      return;
    }
    if (ns - i < uncovered) return;
    for (Index y = 0; y < nt; ++y) {
      if (continuous_only) {
        bool ok = true;
        for (auto j : source.closed_neighborhood(static_cast<Index>(i))) {
          if (j >= i) break;
          if (!target.in_closed_neighborhood(y, assign[j])) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      assign[i] = y;
      if (hits[y]++ == 0) --uncovered;
      step(i + 1);
      if (--hits[y] == 0) ++uncovered;
    }
  };
  step(0);
  return count;
}

/// Materialized form of for_each_surjection. Requires |S| >= |T|.
inline std::vector<DigitalMap> enumerate_surjections(const DigitalImage& source,
                                                     const DigitalImage& target,
                                                     bool continuous_only,
                                                     std::optional<std::uint64_t> cap = std::nullopt) {
  if (source.size() < target.size()) {
    throw DomainError("enumerate_surjections: source is smaller than target");
  }
  std::vector<DigitalMap> out;
  for_each_surjection(
      source, target, continuous_only,
      [&](std::span<const DigitalImage::Index> a) {
        out.emplace_back(source, target, std::vector<DigitalImage::Index>(a.begin(), a.end()));
      },
      cap);
  return out;
}

/// Some isomorphism X -> Y, found by backtracking over bijections that
/// preserve and reflect adjacency; empty when none exists.
inline std::optional<DigitalMap> iso_search(const DigitalImage& x, const DigitalImage& y,
                                            std::size_t cap = 8) {
  using Index = DigitalImage::Index;
  if (x.size() != y.size()) return std::nullopt;
  if (x.size() > cap) {
    throw CeilingExceeded("iso_search: " + std::to_string(x.size()) + " points exceeds cap " +
                          std::to_string(cap));
  }
  const std::size_t n = x.size();
  std::vector<Index> assign(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> step = [&](std::size_t i) {
    if (i == n) return true;
    for (Index c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = x.adjacent_at(static_cast<Index>(i), static_cast<Index>(j)) ==
             y.adjacent_at(c, assign[j]);
      }
      if (!ok) continue;
      assign[i] = c;
      used[c] = 1;
      if (step(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!step(0)) return std::nullopt;
  return DigitalMap(x, y, std::move(assign));
}

enum class Predicate {
  Continuous,
  WlSurjection,
  LocalIsoSurjection,
  PseudoOriginal,
  PseudoRevised,
  Covering,
};

inline constexpr std::array<Predicate, 6> kAllPredicates = {
    Predicate::Continuous,     Predicate::WlSurjection,  Predicate::LocalIsoSurjection,
    Predicate::PseudoOriginal, Predicate::PseudoRevised, Predicate::Covering};

inline std::string_view to_string(Predicate p) {
  switch (p) {
    case Predicate::Continuous: return "continuous";
    case Predicate::WlSurjection: return "wl-surjection";
    case Predicate::LocalIsoSurjection: return "local-iso-surjection";
    case Predicate::PseudoOriginal: return "pseudo-original";
    case Predicate::PseudoRevised: return "pseudo-revised";
    case Predicate::Covering: return "covering";
  }
  return "?";
}

inline Predicate predicate_from_string(std::string_view s) {
  for (auto p : kAllPredicates) {
    if (to_string(p) == s) return p;
  }
  throw DomainError("unknown predicate '" + std::string(s) + "'");
}

/// Report for p under the named predicate; "continuous" is wrapped into a
/// report without per-base entries.
inline PredicateReport evaluate(Predicate pred, const DigitalMap& p) {
  switch (pred) {
    case Predicate::Continuous: {
      PredicateReport rep;
      rep.predicate = "continuous";
      rep.surjective = is_surjective_map(p);
      auto v = is_continuous(p);
      rep.holds = v.holds;
      rep.witness = v.witness;
      return rep;
    }
    case Predicate::WlSurjection: return check_wl_surjection(p);
    case Predicate::LocalIsoSurjection: return check_local_iso_surjection(p);
    case Predicate::PseudoOriginal: return check_original_pseudocovering(p);
    case Predicate::PseudoRevised: return check_revised_pseudocovering(p);
    case Predicate::Covering: return check_digital_covering(p);
  }
  throw DomainError("unknown predicate");
}

inline bool holds(Predicate pred, const DigitalMap& p) { return evaluate(pred, p).holds; }

/// A map satisfying the hypothesis but not the conclusion.
struct Counterexample {
  DigitalMap map;
  PredicateReport conclusion;  // carries the failing clause
};

struct ScanResult {
  std::vector<Counterexample> counterexamples;
  std::uint64_t image_pairs = 0;
  std::uint64_t maps_checked = 0;
  std::uint64_t hypothesis_held = 0;
};

/// An ordered (source, target) pair of enumerated images with |S| >= |T|.
struct ImagePair {
  std::size_t source;
  std::size_t target;
};

/// Pairs in nondecreasing |S|+|T|, then |S|, then enumeration order.
inline std::vector<ImagePair> image_pairs(const std::vector<DigitalImage>& images) {
  std::vector<ImagePair> out;
  for (std::size_t s = 0; s < images.size(); ++s) {
    for (std::size_t t = 0; t < images.size(); ++t) {
      if (images[s].size() >= images[t].size()) out.push_back({s, t});
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const ImagePair& a, const ImagePair& b) {
    const auto sa = images[a.source].size() + images[a.target].size();
    const auto sb = images[b.source].size() + images[b.target].size();
    if (sa != sb) return sa < sb;
    return images[a.source].size() < images[b.source].size();
  });
  return out;
}

/// Runs visit(pair_index, map) over every continuous surjection between the
/// enumerated images. Work is split across threads by pair; each visitor
/// call sees maps of one pair in order, and the pair index lets callers
/// merge results deterministically.
///
/// Only continuous maps are produced: each predicate of the lattice
/// requires continuity, so discarded maps satisfy none of them.
inline void for_each_continuous_surjection(
    const EnumerationBounds& bounds, const std::vector<DigitalImage>& images,
    const std::vector<ImagePair>& pairs,
    const std::function<void(std::size_t, const DigitalMap&)>& visit,
    unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= pairs.size()) return;
      const auto& s = images[pairs[k].source];
      const auto& t = images[pairs[k].target];
      for_each_surjection(
          s, t, true,
          [&](std::span<const DigitalImage::Index> a) {
            visit(k, DigitalMap(s, t, std::vector<DigitalImage::Index>(a.begin(), a.end())));
          },
          bounds.max_maps_per_pair);
    }
  };
  std::vector<std::future<void>> jobs;
  for (unsigned i = 0; i < threads; ++i) jobs.push_back(std::async(std::launch::async, worker));
  for (auto& j : jobs) j.get();
}

/// Number of continuous surjections the scan would check, counted by a
/// dry run of the enumerator. Stops early once the ceiling is passed.
inline std::uint64_t scan_size(const EnumerationBounds& bounds,
                               const std::vector<DigitalImage>& images,
                               const std::vector<ImagePair>& pairs) {
  std::uint64_t total = 0;
  for (const auto& pr : pairs) {
    total += for_each_surjection(images[pr.source], images[pr.target], true,
                                 [](std::span<const DigitalImage::Index>) {});
    if (total > bounds.ceiling) return total;
  }
  return total;
}

/// Every enumerated map satisfying hypothesis but not conclusion, ordered
/// by |S|+|T| and then enumeration order. An empty list means the
/// implication held on the whole search space.
inline ScanResult implication_scan(Predicate hypothesis, Predicate conclusion,
                                   const EnumerationBounds& bounds, unsigned threads = 0) {
  const auto images = enumerate_images(bounds);
  const auto pairs = image_pairs(images);
  if (const auto n = scan_size(bounds, images, pairs); n > bounds.ceiling) {
    throw CeilingExceeded("implication scan: more than " + std::to_string(bounds.ceiling) +
                          " candidate maps");
  }
  std::vector<std::vector<Counterexample>> found(pairs.size());
  std::vector<std::uint64_t> checked(pairs.size(), 0);
  std::vector<std::uint64_t> held(pairs.size(), 0);
  for_each_continuous_surjection(
      bounds, images, pairs,
      [&](std::size_t k, const DigitalMap& m) {
        ++checked[k];
        if (!holds(hypothesis, m)) return;
        ++held[k];
        auto rep = evaluate(conclusion, m);
        if (!rep.holds) found[k].push_back({m, std::move(rep)});
      },
      threads);
  ScanResult out;
  out.image_pairs = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out.maps_checked += checked[k];
    out.hypothesis_held += held[k];
    for (auto& c : found[k]) out.counterexamples.push_back(std::move(c));
  }
  return out;
}

}  // namespace digicov

#endif  // DIGICOV_ORACLE_HPP
