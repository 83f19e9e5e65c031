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

// Maps between digital images and the continuity, isomorphism, local
// isomorphism and weakly local (WL) isomorphism tests.
//
// Every test scans points in lexicographic order and reports the first
// failure it meets, so witnesses are reproducible.

#ifndef DIGICOV_MORPHISM_HPP
#define DIGICOV_MORPHISM_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "digicov/lattice.hpp"
#include "digicov/witness.hpp"

namespace digicov {

/// A total map between the point sets of two digital images.
class DigitalMap {
 public:
  using Index = DigitalImage::Index;

  /// assignment[i] is the target index of source point i.
  DigitalMap(DigitalImage source, DigitalImage target, std::vector<Index> assignment)
      : source_(std::move(source)), target_(std::move(target)), assign_(std::move(assignment)) {
    if (assign_.size() != source_.size()) {
      throw DomainError("digital map: assignment does not cover the source");
    }
    for (auto y : assign_) {
      if (y >= target_.size()) throw DomainError("digital map: target index out of range");
    }
  }

  /// Builds a map from explicit (source point, target point) pairs; every
  /// source point must appear exactly once.
  static DigitalMap from_pairs(DigitalImage source, DigitalImage target,
                               std::span<const std::pair<Point, Point>> pairs) {
    constexpr auto unset = static_cast<Index>(-1);
    std::vector<Index> assignment(source.size(), unset);
    for (const auto& [x, y] : pairs) {
      const auto xi = source.find(x);
      if (!xi) throw DomainError("digital map: " + to_string(x) + " is not a source point");
      const auto yi = target.find(y);
      if (!yi) throw DomainError("digital map: " + to_string(y) + " is not a target point");
      if (assignment[*xi] != unset) {
        throw DomainError("digital map: " + to_string(x) + " is assigned twice");
      }
      assignment[*xi] = *yi;
    }
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      if (assignment[i] == unset) {
        throw DomainError("digital map: " + to_string(source.point(static_cast<Index>(i))) +
                          " is not assigned");
      }
    }
    return DigitalMap(std::move(source), std::move(target), std::move(assignment));
  }

  static DigitalMap from_function(DigitalImage source, DigitalImage target,
                                  const std::function<Point(const Point&)>& f) {
    std::vector<Index> assignment;
    assignment.reserve(source.size());
    for (const auto& x : source.points()) {
      const auto y = f(x);
      const auto yi = target.find(y);
      if (!yi) {
        throw DomainError("digital map: f" + to_string(x) + " = " + to_string(y) +
                          " is not a target point");
      }
      assignment.push_back(*yi);
    }
    return DigitalMap(std::move(source), std::move(target), std::move(assignment));
  }

  static DigitalMap identity(const DigitalImage& image) {
    std::vector<Index> assignment(image.size());
    for (std::size_t i = 0; i < assignment.size(); ++i) assignment[i] = static_cast<Index>(i);
    return DigitalMap(image, image, std::move(assignment));
  }

  const DigitalImage& source() const { return source_; }
  const DigitalImage& target() const { return target_; }
  std::span<const Index> assignment() const { return assign_; }

  Index image_index(Index x) const { return assign_[x]; }

  const Point& operator()(const Point& x) const {
    return target_.point(assign_[source_.index_of(x)]);
  }

  std::vector<std::pair<Point, Point>> pairs() const {
    std::vector<std::pair<Point, Point>> out;
    out.reserve(assign_.size());
    for (std::size_t i = 0; i < assign_.size(); ++i) {
      out.emplace_back(source_.point(static_cast<Index>(i)), target_.point(assign_[i]));
    }
    return out;
  }

  friend bool operator==(const DigitalMap& a, const DigitalMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.assign_ == b.assign_;
  }

 private:
  DigitalImage source_;
  DigitalImage target_;
  std::vector<Index> assign_;
};

inline bool is_surjective_map(const DigitalMap& f) {
  std::vector<char> hit(f.target().size(), 0);
  for (auto y : f.assignment()) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

/// First target point without a preimage, if any.
inline Verdict check_surjective(const DigitalMap& f) {
  std::vector<char> hit(f.target().size(), 0);
  for (auto y : f.assignment()) hit[y] = 1;
  for (std::size_t y = 0; y < hit.size(); ++y) {
    if (!hit[y]) return Verdict::fail(NotSurjective{f.target().point(static_cast<DigitalImage::Index>(y))});
  }
  return Verdict::ok();
}

inline Verdict check_injective(const DigitalMap& f) {
  using Index = DigitalMap::Index;
  constexpr auto unset = static_cast<Index>(-1);
  std::vector<Index> first_pre(f.target().size(), unset);
  // Scan pairs (x1, x2) with x2 increasing so the reported pair is the
  // lexicographically first collision.
  for (Index x = 0; x < f.source().size(); ++x) {
    auto& slot = first_pre[f.image_index(x)];
    if (slot != unset) return Verdict::fail(NotInjective{f.source().point(slot), f.source().point(x)});
    slot = x;
  }
  return Verdict::ok();
}

/// f(N(x,1)) is contained in N(f(x),1) for every x.
inline Verdict is_continuous(const DigitalMap& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (DigitalMap::Index x = 0; x < src.size(); ++x) {
    const auto fx = f.image_index(x);
    for (auto xp : src.closed_neighborhood(x)) {
      if (!tgt.in_closed_neighborhood(fx, f.image_index(xp))) {
        return Verdict::fail(NonContinuousAt{src.point(x), src.point(xp)});
      }
    }
  }
  return Verdict::ok();
}

/// Continuous bijection with continuous inverse. Clauses are checked in
/// the order injective, surjective, continuous, inverse continuous.
inline Verdict is_isomorphism(const DigitalMap& f) {
  if (auto v = check_injective(f); !v) return v;
  if (auto v = check_surjective(f); !v) return v;
  if (auto v = is_continuous(f); !v) return v;
  const auto& src = f.source();
  const auto& tgt = f.target();
  std::vector<DigitalMap::Index> inverse(tgt.size());
  for (DigitalMap::Index x = 0; x < src.size(); ++x) inverse[f.image_index(x)] = x;
  for (DigitalMap::Index y = 0; y < tgt.size(); ++y) {
    for (auto yp : tgt.closed_neighborhood(y)) {
      if (!src.in_closed_neighborhood(inverse[y], inverse[yp])) {
        return Verdict::fail(InverseNotContinuousAt{tgt.point(y), tgt.point(yp)});
      }
    }
  }
  return Verdict::ok();
}

/// The map S -> T induced by f, both sides carrying the ambient adjacency
/// kind restricted to the subset. Throws DomainError unless S is a set of
/// source points, T a set of target points and f(S) is contained in T.
inline DigitalMap restrict(const DigitalMap& f, std::vector<Point> domain,
                           std::vector<Point> codomain) {
  DigitalImage sub_source = sub_image(f.source(), std::move(domain));
  DigitalImage sub_target = sub_image(f.target(), std::move(codomain));
  std::vector<DigitalMap::Index> assignment;
  assignment.reserve(sub_source.size());
  for (const auto& x : sub_source.points()) {
    const auto& y = f(x);
    const auto yi = sub_target.find(y);
    if (!yi) {
      throw DomainError("restrict: image " + to_string(y) + " of " + to_string(x) +
                        " is outside the codomain");
    }
    assignment.push_back(*yi);
  }
  return DigitalMap(std::move(sub_source), std::move(sub_target), std::move(assignment));
}

/// g after f. Requires f.target() == g.source().
inline DigitalMap compose(const DigitalMap& f, const DigitalMap& g) {
  if (!(f.target() == g.source())) {
    throw DomainError("compose: target of the first map is not the source of the second");
  }
  std::vector<DigitalMap::Index> assignment(f.source().size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    assignment[i] = g.image_index(f.image_index(static_cast<DigitalMap::Index>(i)));
  }
  return DigitalMap(f.source(), g.target(), std::move(assignment));
}

/// How the codomain of h|N(x,1) is chosen.
enum class LocalMode {
  /// Codomain is N(h(x),1) and the restriction must be onto it (local
  /// isomorphism, digital covering condition (3)).
  Full,
  /// Codomain is h(N(x,1)) (weakly local isomorphism).
  Image,
  /// As Image, but h(N(x,1)) must also lie in N(h(x),1) (pseudocovering
  /// condition (3)).
  ImageWithinNeighborhood,
};

namespace detail {

struct LocalDefectDetail {
  Defect reason;
  Point first;
  Point second;
};

/// Decides whether h restricted to N(x,1) is an isomorphism onto the
/// codomain selected by mode; returns the first defect otherwise.
///
/// On the index level the restriction is a graph map between induced
/// subgraphs, so "isomorphism" reduces to: bijective onto the codomain, and
/// adjacency preserved and reflected on every member pair.
inline std::optional<LocalDefectDetail> local_defect(const DigitalMap& h, DigitalMap::Index x,
                                                      LocalMode mode) {
  const auto& src = h.source();
  const auto& tgt = h.target();
  const auto members = src.closed_neighborhood(x);
  const auto hx = h.image_index(x);

  if (mode != LocalMode::Image) {
    for (auto a : members) {
      const auto ha = h.image_index(a);
      if (!tgt.in_closed_neighborhood(hx, ha)) {
        return LocalDefectDetail{Defect::OutsideCodomain, src.point(a), tgt.point(ha)};
      }
    }
  }
  if (mode == LocalMode::Full) {
    for (auto y : tgt.closed_neighborhood(hx)) {
      const bool covered = std::any_of(members.begin(), members.end(),
                                       [&](auto a) { return h.image_index(a) == y; });
      if (!covered) return LocalDefectDetail{Defect::NotOnto, tgt.point(y), tgt.point(hx)};
    }
  }
  const std::size_t r = members.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (h.image_index(members[i]) == h.image_index(members[j])) {
        return LocalDefectDetail{Defect::NotInjective, src.point(members[i]), src.point(members[j])};
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (src.adjacent_at(members[i], members[j]) &&
          !tgt.adjacent_at(h.image_index(members[i]), h.image_index(members[j]))) {
        return LocalDefectDetail{Defect::NotContinuous, src.point(members[i]), src.point(members[j])};
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (tgt.adjacent_at(h.image_index(members[i]), h.image_index(members[j])) &&
          !src.adjacent_at(members[i], members[j])) {
        return LocalDefectDetail{Defect::InverseNotContinuous, src.point(members[i]),
                                 src.point(members[j])};
      }
    }
  }
  return std::nullopt;
}

inline Verdict local_verdict(const DigitalMap& h, LocalMode mode) {
  for (DigitalMap::Index x = 0; x < h.source().size(); ++x) {
    if (auto d = local_defect(h, x, mode)) {
      return Verdict::fail(LocalFailure{h.source().point(x), d->reason, std::move(d->first),
                                        std::move(d->second)});
    }
  }
  return Verdict::ok();
}

}  // namespace detail

/// Every N(x,1) maps isomorphically onto N(h(x),1).
inline Verdict is_local_isomorphism(const DigitalMap& h) {
  return detail::local_verdict(h, LocalMode::Full);
}

/// Every N(x,1) maps isomorphically onto its image h(N(x,1)).
inline Verdict is_wl_isomorphism(const DigitalMap& h) {
  return detail::local_verdict(h, LocalMode::Image);
}

/// The restriction of h to N(x,1) with the codomain selected by mode, as a
/// map of sub-images. Throws DomainError when mode demands N(h(x),1) as
/// codomain and the image leaves it.
inline DigitalMap local_restriction(const DigitalMap& h, const Point& x, LocalMode mode) {
  auto nbhd = neighborhood(h.source(), x);
  std::vector<Point> codomain;
  if (mode == LocalMode::Full) {
    codomain = neighborhood(h.target(), h(x)).members;
  } else {
    for (const auto& m : nbhd.members) codomain.push_back(h(m));
    std::sort(codomain.begin(), codomain.end());
    codomain.erase(std::unique(codomain.begin(), codomain.end()), codomain.end());
  }
  return restrict(h, std::move(nbhd.members), std::move(codomain));
}

}  // namespace digicov

#endif  // DIGICOV_MORPHISM_HPP
