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

#ifndef DIGICOV_WITNESS_HPP
#define DIGICOV_WITNESS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "digicov/lattice.hpp"

namespace digicov {

/// Why a restriction h|N(x,1) fails to be an isomorphism onto its codomain.
///
///   OutsideCodomain       first in N(x,1), second = h(first) outside N(h(x),1)
///   NotOnto               first in N(h(x),1) has no preimage in N(x,1);
///                         second = h(x)
///   NotInjective          first != second in N(x,1) share an image
///   NotContinuous         first ~ second, their images are not adjacent
///   InverseNotContinuous  images adjacent, first and second are not
///   SheetOutsidePreimage  first in the sheet N(e,1), second = p(first)
///                         outside N(b,1)
enum class Defect {
  OutsideCodomain,
  NotOnto,
  NotInjective,
  NotContinuous,
  InverseNotContinuous,
  SheetOutsidePreimage,
};

inline std::string_view to_string(Defect d) {
  switch (d) {
    case Defect::OutsideCodomain: return "outside-codomain";
    case Defect::NotOnto: return "not-onto";
    case Defect::NotInjective: return "not-injective";
    case Defect::NotContinuous: return "not-continuous";
    case Defect::InverseNotContinuous: return "inverse-not-continuous";
    case Defect::SheetOutsidePreimage: return "sheet-outside-preimage";
  }
  return "?";
}

inline std::optional<Defect> defect_from_string(std::string_view s) {
  for (auto d : {Defect::OutsideCodomain, Defect::NotOnto, Defect::NotInjective,
                 Defect::NotContinuous, Defect::InverseNotContinuous,
                 Defect::SheetOutsidePreimage}) {
    if (to_string(d) == s) return d;
  }
  return std::nullopt;
}

struct NonContinuousAt {
  Point x;
  Point x_prime;  // in N(x,1), f(x_prime) not in N(f(x),1)
  friend bool operator==(const NonContinuousAt&, const NonContinuousAt&) = default;
};

struct NotInjective {
  Point x1;
  Point x2;
  friend bool operator==(const NotInjective&, const NotInjective&) = default;
};

struct NotSurjective {
  Point y;
  friend bool operator==(const NotSurjective&, const NotSurjective&) = default;
};

struct InverseNotContinuousAt {
  Point y;
  Point y_prime;  // in N(y,1), f^-1(y_prime) not in N(f^-1(y),1)
  friend bool operator==(const InverseNotContinuousAt&, const InverseNotContinuousAt&) = default;
};

struct LocalFailure {
  Point x;
  Defect reason;
  Point first;
  Point second;
  friend bool operator==(const LocalFailure&, const LocalFailure&) = default;
};

/// Failure of clause 1 (sheet leaves the preimage) or clause 3 (sheet
/// restriction is not an isomorphism) at base point b for fiber point e.
struct CoveringFailure {
  Point b;
  int clause;
  Point e;
  Defect reason;
  Point first;
  Point second;
  friend bool operator==(const CoveringFailure&, const CoveringFailure&) = default;
};

struct MissingPreimagePoint {
  Point b;
  Point e;  // in p^-1(N(b,1)) but in no sheet
  friend bool operator==(const MissingPreimagePoint&, const MissingPreimagePoint&) = default;
};

struct OverlappingSheets {
  Point b;
  Point e_i;
  Point e_j;
  friend bool operator==(const OverlappingSheets&, const OverlappingSheets&) = default;
};

using Witness = std::variant<NonContinuousAt, NotInjective, NotSurjective,
                             InverseNotContinuousAt, LocalFailure, CoveringFailure,
                             MissingPreimagePoint, OverlappingSheets>;

/// Outcome of a decision procedure; a failure always carries a witness.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict ok() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }

  explicit operator bool() const { return holds; }
};

inline std::string_view witness_name(const Witness& w) {
  return std::visit(
      [](const auto& v) -> std::string_view {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NonContinuousAt>) return "NonContinuousAt";
        else if constexpr (std::is_same_v<T, NotInjective>) return "NotInjective";
        else if constexpr (std::is_same_v<T, NotSurjective>) return "NotSurjective";
        else if constexpr (std::is_same_v<T, InverseNotContinuousAt>) return "InverseNotContinuousAt";
        else if constexpr (std::is_same_v<T, LocalFailure>) return "LocalFailure";
        else if constexpr (std::is_same_v<T, CoveringFailure>) return "CoveringFailure";
        else if constexpr (std::is_same_v<T, MissingPreimagePoint>) return "MissingPreimagePoint";
        else return "OverlappingSheets";
      },
      w);
}

/// One-line human-readable rendering.
inline std::string describe(const Witness& w) {
  struct Visitor {
    std::string operator()(const NonContinuousAt& v) const {
      return "not continuous at " + to_string(v.x) + ": neighbor " + to_string(v.x_prime) +
             " maps outside N(f(x),1)";
    }
    std::string operator()(const NotInjective& v) const {
      return "not injective: " + to_string(v.x1) + " and " + to_string(v.x2) +
             " have the same image";
    }
    std::string operator()(const NotSurjective& v) const {
      return "not surjective: " + to_string(v.y) + " has no preimage";
    }
    std::string operator()(const InverseNotContinuousAt& v) const {
      return "inverse not continuous at " + to_string(v.y) + ": neighbor " +
             to_string(v.y_prime) + " pulls back outside N(f^-1(y),1)";
    }
    std::string operator()(const LocalFailure& v) const {
      return "local failure at " + to_string(v.x) + ": " + std::string(to_string(v.reason)) +
             " (" + to_string(v.first) + ", " + to_string(v.second) + ")";
    }
    std::string operator()(const CoveringFailure& v) const {
      return "condition (" + std::to_string(v.clause) + ") fails at b=" + to_string(v.b) +
             " for sheet N(" + to_string(v.e) + ",1): " + std::string(to_string(v.reason)) +
             " (" + to_string(v.first) + ", " + to_string(v.second) + ")";
    }
    std::string operator()(const MissingPreimagePoint& v) const {
      return "condition (1) fails at b=" + to_string(v.b) + ": " + to_string(v.e) +
             " lies in p^-1(N(b,1)) but in no sheet N(e_i,1)";
    }
    std::string operator()(const OverlappingSheets& v) const {
      return "condition (2) fails at b=" + to_string(v.b) + ": sheets N(" + to_string(v.e_i) +
             ",1) and N(" + to_string(v.e_j) + ",1) intersect";
    }
  };
  return std::visit(Visitor{}, w);
}

}  // namespace digicov

#endif  // DIGICOV_WITNESS_HPP
