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

// Named reproductions of the known results about the wrap map and the
// implications between covering-type predicates. Each one rebuilds its
// fixtures, runs the checkers or scans, and records one line per claim.

#ifndef DIGICOV_REPRO_HPP
#define DIGICOV_REPRO_HPP

#include <atomic>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "digicov/catalog.hpp"
#include "digicov/covering.hpp"
#include "digicov/oracle.hpp"

namespace digicov {

struct ReproCheck {
  std::string claim;
  bool passed;
  std::string detail;
};

struct ReproReport {
  std::string name;
  std::vector<ReproCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.passed; });
  }
  void add(std::string claim, bool passed, std::string detail = {}) {
    checks.push_back({std::move(claim), passed, std::move(detail)});
  }
};

inline std::vector<SimpleClosedCurve> catalog_curves() {
  std::vector<SimpleClosedCurve> out;
  for (const auto& name : catalog_names()) out.push_back(scc_catalog(name));
  return out;
}

inline std::string curve_label(const SimpleClosedCurve& c) {
  return "SC_" + std::to_string(c.image.kind().k()) + "^{" + std::to_string(c.image.dim()) + "," +
         std::to_string(c.length()) + "}";
}

/// The wrap map over [0, 3l] fails the original pseudocovering at x_{l-1}
/// with 0 uncovered, yet is a revised pseudocovering and WL-surjection.
inline ReproReport repro_wrap_map() {
  ReproReport rep{"remark-3-1", {}};
  for (const auto& curve : catalog_curves()) {
    const auto l = curve.length();
    const auto p = wrap_map(curve, default_window_end(l));
    const std::string tag = curve_label(curve) + ", window [0," + std::to_string(3 * l) + "]: ";

    const auto original = check_original_pseudocovering(p);
    const Witness expected = MissingPreimagePoint{curve.at(l - 1), Point{0}};
    rep.add(tag + "not an original pseudocovering", !original.holds);
    rep.add(tag + "condition (1) fails first at b=x_{l-1} with 0 uncovered",
            original.witness && *original.witness == expected,
            original.witness ? describe(*original.witness) : "no witness");
    rep.add(tag + "revised pseudocovering", check_revised_pseudocovering(p).holds);
    rep.add(tag + "WL-isomorphic surjection", check_wl_surjection(p).holds);
    rep.add(tag + "not a digital covering", !check_digital_covering(p).holds);
    rep.add(tag + "not a local isomorphism", !is_local_isomorphism(p).holds);
  }
  return rep;
}

/// Sheet union inside p^-1(N(b,1)) for every enumerated WL-surjection;
/// strict for the wrap map at x_{l-1}.
inline ReproReport repro_inclusion(const EnumerationBounds& bounds) {
  ReproReport rep{"prop-3-9", {}};
  const auto images = enumerate_images(bounds);
  const auto pairs = image_pairs(images);
  if (scan_size(bounds, images, pairs) > bounds.ceiling) {
    throw CeilingExceeded("inclusion scan exceeds the ceiling");
  }
  std::atomic<std::uint64_t> wl{0}, violations{0}, strict{0};
  for_each_continuous_surjection(bounds, images, pairs, [&](std::size_t, const DigitalMap& m) {
    if (!check_wl_surjection(m).holds) return;
    ++wl;
    const auto inc = check_inclusion_39(m);
    if (!inc.holds) ++violations;
    for (const auto& b : inc.per_base) {
      if (!b.equality38) {
        ++strict;
        break;
      }
    }
  });
  rep.add("inclusion holds at every base point of every enumerated WL-surjection",
          violations == 0,
          std::to_string(wl.load()) + " WL-surjections, " + std::to_string(violations.load()) +
              " violations, " + std::to_string(strict.load()) + " with a strict inclusion");
  for (const auto& curve : catalog_curves()) {
    const auto l = curve.length();
    const auto p = wrap_map(curve, default_window_end(l));
    const auto inc = check_inclusion_39(p);
    const auto& b = curve.at(l - 1);
    bool strict_here = false;
    for (const auto& base : inc.per_base) {
      if (base.b == b) strict_here = base.cond1 && !base.equality38;
    }
    rep.add(curve_label(curve) + " wrap map: inclusion strict at b=x_{l-1}",
            inc.holds && strict_here);
  }
  return rep;
}

namespace detail {

inline void add_scan(ReproReport& rep, Predicate hyp, Predicate concl,
                     const EnumerationBounds& bounds, bool expect_counterexample) {
  const auto scan = implication_scan(hyp, concl, bounds);
  std::ostringstream detail;
  detail << scan.maps_checked << " maps, " << scan.hypothesis_held << " satisfy "
         << to_string(hyp) << ", " << scan.counterexamples.size() << " counterexamples";
  if (!scan.counterexamples.empty()) {
    const auto& first = scan.counterexamples.front();
    detail << "; smallest: |S|=" << first.map.source().size()
           << " |T|=" << first.map.target().size();
    if (first.conclusion.witness) detail << ", " << describe(*first.conclusion.witness);
  }
  const std::string claim = std::string(to_string(hyp)) + " => " + std::string(to_string(concl)) +
                            (expect_counterexample ? " fails (counterexample expected)"
                                                   : " holds (no counterexample)");
  rep.add(claim, expect_counterexample == !scan.counterexamples.empty(), detail.str());
}

}  // namespace detail

inline ReproReport repro_corollary(const EnumerationBounds& bounds) {
  ReproReport rep{"corollary", {}};
  detail::add_scan(rep, Predicate::PseudoOriginal, Predicate::WlSurjection, bounds, false);
  detail::add_scan(rep, Predicate::WlSurjection, Predicate::PseudoOriginal, bounds, true);
  detail::add_scan(rep, Predicate::WlSurjection, Predicate::PseudoRevised, bounds, false);
  detail::add_scan(rep, Predicate::PseudoRevised, Predicate::WlSurjection, bounds, false);
  return rep;
}

/// Digital covering and local-isomorphic surjection coincide.
inline ReproReport repro_covering_equivalence(const EnumerationBounds& bounds) {
  ReproReport rep{"theorem-1", {}};
  detail::add_scan(rep, Predicate::Covering, Predicate::LocalIsoSurjection, bounds, false);
  detail::add_scan(rep, Predicate::LocalIsoSurjection, Predicate::Covering, bounds, false);
  return rep;
}

inline ReproReport repro_summary(const EnumerationBounds& bounds) {
  ReproReport rep{"summary", {}};
  detail::add_scan(rep, Predicate::Covering, Predicate::PseudoRevised, bounds, false);
  detail::add_scan(rep, Predicate::PseudoRevised, Predicate::Covering, bounds, true);
  const auto p = wrap_map(scc_catalog("sc8-2-4"), 12);
  rep.add("wrap map onto SC_8^{2,4} is a revised pseudocovering but not a digital covering",
          check_revised_pseudocovering(p).holds && !check_digital_covering(p).holds);
  return rep;
}

inline const std::vector<std::string_view>& repro_names() {
  static const std::vector<std::string_view> names = {"remark-3-1", "prop-3-9", "corollary",
                                                      "theorem-1", "summary"};
  return names;
}

inline ReproReport run_repro(std::string_view name, const EnumerationBounds& bounds) {
  if (name == "remark-3-1") return repro_wrap_map();
  if (name == "prop-3-9") return repro_inclusion(bounds);
  if (name == "corollary") return repro_corollary(bounds);
  if (name == "theorem-1") return repro_covering_equivalence(bounds);
  if (name == "summary") return repro_summary(bounds);
  throw DomainError("unknown result '" + std::string(name) + "'");
}

}  // namespace digicov

#endif  // DIGICOV_REPRO_HPP
