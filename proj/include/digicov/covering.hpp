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

// Covering-type predicates for a surjection p: (E,k0) -> (B,k1).
//
// For a base point b the fiber is p^-1(b) = {e_i}, the sheets are the
// neighborhoods N(e_i,1), and the three clauses checked per base point are
//
//   (1) p^-1(N(b,1)) equals the union of the sheets (original pseudocovering
//       and digital covering), or only contains it (revised pseudocovering);
//   (2) sheets over distinct fiber points are disjoint;
//   (3) p restricted to each sheet is an isomorphism, onto its own image
//       (pseudocoverings) or onto all of N(b,1) (digital covering).

#ifndef DIGICOV_COVERING_HPP
#define DIGICOV_COVERING_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digicov/lattice.hpp"
#include "digicov/morphism.hpp"
#include "digicov/witness.hpp"

namespace digicov {

struct FiberDecomposition {
  Point base_point;
  std::vector<Point> fiber;
  std::vector<Neighborhood> sheets;  // one per fiber point, same order
  std::vector<Point> sheet_union;
  std::vector<Point> preimage_of_nbhd;  // p^-1(N(b,1))
};

/// Everything the clauses talk about at base point b, by direct enumeration.
inline FiberDecomposition fiber_decomposition(const DigitalMap& p, const Point& b) {
  const auto bi = p.target().find(b);
  if (!bi) throw DomainError("fiber_decomposition: " + to_string(b) + " is not a target point");
  const auto& src = p.source();
  const auto& tgt = p.target();
  FiberDecomposition out;
  out.base_point = b;
  std::vector<char> in_union(src.size(), 0);
  for (DigitalMap::Index e = 0; e < src.size(); ++e) {
    if (p.image_index(e) == *bi) {
      out.fiber.push_back(src.point(e));
      out.sheets.push_back(neighborhood(src, src.point(e)));
      for (auto m : src.closed_neighborhood(e)) in_union[m] = 1;
    }
    if (tgt.in_closed_neighborhood(*bi, p.image_index(e))) {
      out.preimage_of_nbhd.push_back(src.point(e));
    }
  }
  for (DigitalMap::Index e = 0; e < src.size(); ++e) {
    if (in_union[e]) out.sheet_union.push_back(src.point(e));
  }
  return out;
}

/// Clause results at one base point. cond2/cond3 are empty when the
/// predicate does not evaluate them.
struct BaseReport {
  Point b;
  bool cond1 = true;
  std::optional<bool> cond2;
  std::optional<bool> cond3;
  bool equality38 = true;  // p^-1(N(b,1)) equals the sheet union
  std::optional<Witness> witness;
  std::vector<Point> index_set;  // the chosen M, subset search only

  bool holds() const { return cond1 && cond2.value_or(true) && cond3.value_or(true); }
};

struct PredicateReport {
  std::string predicate;
  bool holds = true;
  bool surjective = true;
  std::vector<BaseReport> per_base;  // lexicographic base-point order
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

/// How clause (1) is read.
enum class SheetCondition {
  Equality,   // p^-1(N(b,1)) = union of sheets
  Inclusion,  // union of sheets contained in p^-1(N(b,1))
};

namespace detail {

using Index = DigitalMap::Index;

inline std::vector<Index> fiber_indices(const DigitalMap& p, Index b) {
  std::vector<Index> out;
  for (Index e = 0; e < p.source().size(); ++e) {
    if (p.image_index(e) == b) out.push_back(e);
  }
  return out;
}

inline bool sheets_intersect(const DigitalImage& src, Index e1, Index e2) {
  const auto a = src.closed_neighborhood(e1);
  const auto b = src.closed_neighborhood(e2);
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

/// Evaluates the requested clauses at base point b for index set M.
/// mode3 empty means clauses (2) and (3) are skipped.
inline BaseReport evaluate_base(const DigitalMap& p, Index b, std::span<const Index> index_set,
                                SheetCondition clause1, std::optional<LocalMode> mode3) {
  const auto& src = p.source();
  const auto& tgt = p.target();
  BaseReport rep;
  rep.b = tgt.point(b);

  std::vector<char> in_union(src.size(), 0);
  for (auto e : index_set) {
    for (auto m : src.closed_neighborhood(e)) in_union[m] = 1;
  }
  std::optional<Witness> missing;
  std::optional<Witness> outside;
  for (Index e = 0; e < src.size(); ++e) {
    const bool pre = tgt.in_closed_neighborhood(b, p.image_index(e));
    if (pre && !in_union[e] && !missing) {
      missing = MissingPreimagePoint{rep.b, src.point(e)};
    }
    if (!pre && in_union[e] && !outside) {
      // Name the first sheet holding the stray point.
      for (auto c : index_set) {
        if (src.in_closed_neighborhood(c, e)) {
          outside = CoveringFailure{rep.b, 1, src.point(c), Defect::SheetOutsidePreimage,
                                    src.point(e), tgt.point(p.image_index(e))};
          break;
        }
      }
    }
  }
  rep.equality38 = !missing && !outside;
  if (clause1 == SheetCondition::Equality) {
    rep.cond1 = rep.equality38;
    if (missing) rep.witness = missing;
    else if (outside) rep.witness = outside;
  } else {
    rep.cond1 = !outside;
    if (outside) rep.witness = outside;
  }

  if (!mode3) return rep;

  rep.cond2 = true;
  for (std::size_t i = 0; i < index_set.size() && *rep.cond2; ++i) {
    for (std::size_t j = i + 1; j < index_set.size(); ++j) {
      if (sheets_intersect(src, index_set[i], index_set[j])) {
        rep.cond2 = false;
        if (!rep.witness) {
          rep.witness = OverlappingSheets{rep.b, src.point(index_set[i]), src.point(index_set[j])};
        }
        break;
      }
    }
  }

  rep.cond3 = true;
  for (auto e : index_set) {
    if (auto d = local_defect(p, e, *mode3)) {
      rep.cond3 = false;
      if (!rep.witness) {
        rep.witness = CoveringFailure{rep.b, 3, src.point(e), d->reason, std::move(d->first),
                                      std::move(d->second)};
      }
      break;
    }
  }
  return rep;
}

/// Largest fiber the subset search will enumerate (2^12 index sets).
inline constexpr std::size_t kSubsetSearchFiberCap = 12;

/// Tries nonempty index sets M of the fiber, full fiber first, and keeps the
/// first that satisfies every clause; otherwise reports the full fiber.
inline BaseReport evaluate_base_subsets(const DigitalMap& p, Index b, SheetCondition clause1,
                                        LocalMode mode3) {
  const auto fiber = fiber_indices(p, b);
  if (fiber.size() > kSubsetSearchFiberCap) {
    throw DomainError("subset search: fiber over " + to_string(p.target().point(b)) + " has " +
                      std::to_string(fiber.size()) + " points, cap is " +
                      std::to_string(kSubsetSearchFiberCap));
  }
  std::optional<BaseReport> full;
  const std::uint32_t all = (1u << fiber.size()) - 1;
  for (std::uint32_t mask = all; mask >= 1; --mask) {
    std::vector<Index> chosen;
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      if (mask & (1u << i)) chosen.push_back(fiber[i]);
    }
    auto rep = evaluate_base(p, b, chosen, clause1, mode3);
    for (auto e : chosen) rep.index_set.push_back(p.source().point(e));
    if (rep.holds()) return rep;
    if (mask == all) full = std::move(rep);
  }
  if (full) return *full;
  // Empty fiber: nothing to choose.
  auto rep = evaluate_base(p, b, {}, clause1, mode3);
  return rep;
}

struct PredicateSpec {
  const char* name;
  SheetCondition clause1;
  std::optional<LocalMode> mode3;
  bool require_surjective;
};

inline PredicateReport run_per_base(const DigitalMap& p, const PredicateSpec& spec,
                                    bool subset_search) {
  PredicateReport rep;
  rep.predicate = spec.name;
  const auto surj = check_surjective(p);
  rep.surjective = surj.holds;
  if (spec.require_surjective && !surj) {
    rep.holds = false;
    rep.witness = surj.witness;
  }
  for (Index b = 0; b < p.target().size(); ++b) {
    BaseReport base = subset_search
                          ? evaluate_base_subsets(p, b, spec.clause1, *spec.mode3)
                          : evaluate_base(p, b, fiber_indices(p, b), spec.clause1, spec.mode3);
    if (!base.holds()) {
      if (rep.holds) rep.witness = base.witness;
      rep.holds = false;
    }
    rep.per_base.push_back(std::move(base));
  }
  return rep;
}

}  // namespace detail

/// Clause (1) in its original equality form at b, with M the whole fiber.
inline Verdict check_condition1_original(const DigitalMap& p, const Point& b) {
  const auto bi = p.target().index_of(b);
  auto rep = detail::evaluate_base(p, bi, detail::fiber_indices(p, bi), SheetCondition::Equality,
                                   std::nullopt);
  return rep.cond1 ? Verdict::ok() : Verdict::fail(*rep.witness);
}

/// Clause (2) at b: sheets over distinct fiber points are disjoint.
inline Verdict check_condition2_disjoint(const DigitalMap& p, const Point& b) {
  const auto bi = p.target().index_of(b);
  const auto fiber = detail::fiber_indices(p, bi);
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    for (std::size_t j = i + 1; j < fiber.size(); ++j) {
      if (detail::sheets_intersect(p.source(), fiber[i], fiber[j])) {
        return Verdict::fail(
            OverlappingSheets{b, p.source().point(fiber[i]), p.source().point(fiber[j])});
      }
    }
  }
  return Verdict::ok();
}

enum class SheetMode {
  WL,   // isomorphism onto p(N(e,1)), which must sit inside N(b,1)
  ISO,  // isomorphism onto N(b,1)
};

/// Clause (3) at b for every fiber point.
inline Verdict check_condition3(const DigitalMap& p, const Point& b, SheetMode mode) {
  const auto bi = p.target().index_of(b);
  const auto local = mode == SheetMode::WL ? LocalMode::ImageWithinNeighborhood : LocalMode::Full;
  for (auto e : detail::fiber_indices(p, bi)) {
    if (auto d = detail::local_defect(p, e, local)) {
      return Verdict::fail(
          CoveringFailure{b, 3, p.source().point(e), d->reason, d->first, d->second});
    }
  }
  return Verdict::ok();
}

/// Original pseudocovering: surjection with clauses (1) equality, (2) and
/// (3) onto the sheet images. M is the whole fiber unless subset_search,
/// in which case some nonempty M must satisfy all three clauses.
inline PredicateReport check_original_pseudocovering(const DigitalMap& p,
                                                     bool subset_search = false) {
  return detail::run_per_base(
      p, {"pseudo-original", SheetCondition::Equality, LocalMode::ImageWithinNeighborhood, true},
      subset_search);
}

/// Digital covering: clauses (1) equality, (2), and (3) onto N(b,1).
inline PredicateReport check_digital_covering(const DigitalMap& p) {
  return detail::run_per_base(p, {"covering", SheetCondition::Equality, LocalMode::Full, true},
                              false);
}

/// Revised pseudocovering: clause (1) weakened to inclusion, (2), and (3)
/// onto the sheet images.
inline PredicateReport check_revised_pseudocovering(const DigitalMap& p) {
  return detail::run_per_base(
      p, {"pseudo-revised", SheetCondition::Inclusion, LocalMode::ImageWithinNeighborhood, true},
      false);
}

/// Sheet union contained in p^-1(N(b,1)) at every b; equality38 records
/// whether the stronger identity holds too.
inline PredicateReport check_inclusion_39(const DigitalMap& p) {
  return detail::run_per_base(p, {"inclusion-39", SheetCondition::Inclusion, std::nullopt, false},
                              false);
}

namespace detail {

inline PredicateReport surjection_with(const DigitalMap& p, const char* name, const Verdict& local) {
  PredicateReport rep;
  rep.predicate = name;
  const auto surj = check_surjective(p);
  rep.surjective = surj.holds;
  if (!surj) {
    rep.holds = false;
    rep.witness = surj.witness;
  } else if (!local) {
    rep.holds = false;
    rep.witness = local.witness;
  }
  return rep;
}

}  // namespace detail

/// Surjective and a WL-isomorphism.
inline PredicateReport check_wl_surjection(const DigitalMap& p) {
  return detail::surjection_with(p, "wl-surjection", is_wl_isomorphism(p));
}

/// Surjective and a local isomorphism.
inline PredicateReport check_local_iso_surjection(const DigitalMap& p) {
  return detail::surjection_with(p, "local-iso-surjection", is_local_isomorphism(p));
}

struct Classification {
  Verdict continuous;
  PredicateReport wl_surjection;
  Verdict local_isomorphism;
  PredicateReport pseudo_original;
  PredicateReport pseudo_revised;
  PredicateReport covering;
};

inline Classification classify(const DigitalMap& p) {
  return {is_continuous(p),
          check_wl_surjection(p),
          is_local_isomorphism(p),
          check_original_pseudocovering(p),
          check_revised_pseudocovering(p),
          check_digital_covering(p)};
}

}  // namespace digicov

#endif  // DIGICOV_COVERING_HPP
