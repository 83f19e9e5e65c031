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

// Re-checks a witness against a map using only point-level set
// computations, so a reported failure can be trusted without trusting the
// checker that produced it.

#ifndef DIGICOV_CERTIFY_HPP
#define DIGICOV_CERTIFY_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "digicov/lattice.hpp"
#include "digicov/morphism.hpp"
#include "digicov/witness.hpp"

namespace digicov {

namespace detail {

inline std::vector<Point> preimages(const DigitalMap& f, const Point& y) {
  std::vector<Point> out;
  for (const auto& x : f.source().points()) {
    if (f(x) == y) out.push_back(x);
  }
  return out;
}

/// Certifies a defect of f restricted to N(center,1). For NotOnto the
/// codomain is N(f(center),1).
inline bool certifies_defect(const DigitalMap& f, const Point& center, Defect reason,
                             const Point& first, const Point& second) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  if (!src.contains(center)) return false;
  const auto nbhd = neighborhood(src, center);
  const auto target_nbhd = neighborhood(tgt, f(center));
  switch (reason) {
    case Defect::OutsideCodomain:
    case Defect::SheetOutsidePreimage:
      return nbhd.contains(first) && f(first) == second && !target_nbhd.contains(second);
    case Defect::NotOnto: {
      if (!target_nbhd.contains(first) || second != f(center)) return false;
      return std::none_of(nbhd.members.begin(), nbhd.members.end(),
                          [&](const Point& a) { return f(a) == first; });
    }
    case Defect::NotInjective:
      return nbhd.contains(first) && nbhd.contains(second) && first != second &&
             f(first) == f(second);
    case Defect::NotContinuous:
      return nbhd.contains(first) && nbhd.contains(second) &&
             adjacent(first, second, src.kind()) && f(first) != f(second) &&
             !adjacent(f(first), f(second), tgt.kind());
    case Defect::InverseNotContinuous:
      return nbhd.contains(first) && nbhd.contains(second) && first != second &&
             !adjacent(first, second, src.kind()) &&
             adjacent(f(first), f(second), tgt.kind());
  }
  return false;
}

}  // namespace detail

/// True when the witness genuinely demonstrates the failure it names.
inline bool certifies(const DigitalMap& f, const Witness& w) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  struct Visitor {
    const DigitalMap& f;
    const DigitalImage& src;
    const DigitalImage& tgt;

    bool operator()(const NonContinuousAt& v) const {
      if (!src.contains(v.x) || !src.contains(v.x_prime)) return false;
      return neighborhood(src, v.x).contains(v.x_prime) &&
             !neighborhood(tgt, f(v.x)).contains(f(v.x_prime));
    }
    bool operator()(const NotInjective& v) const {
      return src.contains(v.x1) && src.contains(v.x2) && v.x1 != v.x2 && f(v.x1) == f(v.x2);
    }
    bool operator()(const NotSurjective& v) const {
      return tgt.contains(v.y) && detail::preimages(f, v.y).empty();
    }
    bool operator()(const InverseNotContinuousAt& v) const {
      if (!tgt.contains(v.y) || !tgt.contains(v.y_prime)) return false;
      const auto pre = detail::preimages(f, v.y);
      const auto pre_prime = detail::preimages(f, v.y_prime);
      if (pre.size() != 1 || pre_prime.size() != 1) return false;
      return neighborhood(tgt, v.y).contains(v.y_prime) &&
             !neighborhood(src, pre[0]).contains(pre_prime[0]);
    }
    bool operator()(const LocalFailure& v) const {
      return detail::certifies_defect(f, v.x, v.reason, v.first, v.second);
    }
    bool operator()(const CoveringFailure& v) const {
      if (!tgt.contains(v.b) || !src.contains(v.e) || f(v.e) != v.b) return false;
      if (v.clause == 1) {
        return v.reason == Defect::SheetOutsidePreimage &&
               detail::certifies_defect(f, v.e, v.reason, v.first, v.second);
      }
      return v.clause == 3 && v.reason != Defect::SheetOutsidePreimage &&
             detail::certifies_defect(f, v.e, v.reason, v.first, v.second);
    }
    bool operator()(const MissingPreimagePoint& v) const {
      if (!tgt.contains(v.b) || !src.contains(v.e)) return false;
      if (!neighborhood(tgt, v.b).contains(f(v.e))) return false;
      for (const auto& e : detail::preimages(f, v.b)) {
        if (neighborhood(src, e).contains(v.e)) return false;
      }
      return true;
    }
    bool operator()(const OverlappingSheets& v) const {
      if (!tgt.contains(v.b) || !src.contains(v.e_i) || !src.contains(v.e_j)) return false;
      if (v.e_i == v.e_j || f(v.e_i) != v.b || f(v.e_j) != v.b) return false;
      const auto a = neighborhood(src, v.e_i);
      const auto b = neighborhood(src, v.e_j);
      return std::any_of(a.members.begin(), a.members.end(),
                         [&](const Point& p) { return b.contains(p); });
    }
  };
  return std::visit(Visitor{f, src, tgt}, w);
}

}  // namespace digicov

#endif  // DIGICOV_CERTIFY_HPP
