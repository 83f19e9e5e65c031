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

#include <catch_amalgamated.hpp>

#include "digicov/catalog.hpp"
#include "digicov/certify.hpp"
#include "digicov/covering.hpp"
#include "digicov/oracle.hpp"
#include "support.hpp"

using namespace digicov;
using test_support::chain;

namespace {

// Diamond labels: x_i is the i-th point of the catalog order.
const Point x0{1, 0}, x1{0, 1}, x2{-1, 0}, x3{0, -1};

DigitalMap wrap12() { return wrap_map(scc_catalog("sc8-2-4"), 12); }
DigitalMap double_cover() { return cyclic_cover(scc_catalog("sc8-2-8"), scc_catalog("sc8-2-4")); }

DigitalMap collapse(std::initializer_list<Coord> ts) {
  return DigitalMap::from_function(DigitalImage(1, 1, chain(ts)), DigitalImage(2, 2, {x0}),
                                   [](const Point&) { return x0; });
}

// Continuous surjections over the small default-like space, for properties.
std::vector<DigitalMap> sample_maps() {
  EnumerationBounds b;
  b.max_points = 4;
  b.box = 3;
  const auto images = enumerate_images(b);
  std::vector<DigitalMap> out;
  for (const auto& pr : image_pairs(images)) {
    for (auto& m : enumerate_surjections(images[pr.source], images[pr.target], true)) {
      out.push_back(std::move(m));
    }
  }
  out.push_back(wrap12());
  out.push_back(double_cover());
  return out;
}

}  // namespace

TEST_CASE("fiber_decomposition examples", "[covering]") {
  const auto id = DigitalMap::identity(test_support::diamond());
  const auto f = fiber_decomposition(id, x1);
  CHECK(f.fiber == std::vector<Point>{x1});
  REQUIRE(f.sheets.size() == 1);
  CHECK(f.sheets[0].members == neighborhood(id.source(), x1).members);
  CHECK(f.sheet_union == f.preimage_of_nbhd);

  const auto w = fiber_decomposition(wrap12(), x0);
  CHECK(w.fiber == chain({0, 4, 8, 12}));

  const auto d = fiber_decomposition(double_cover(), x0);
  CHECK(d.fiber.size() == 2);
  REQUIRE(d.sheets.size() == 2);
  CHECK(d.sheets[0].size() == 3);
  CHECK(d.sheets[1].size() == 3);
  // The 8-curve is listed from (2,0); x_4 is its antipode.
  CHECK(d.fiber == std::vector<Point>{{-2, 0}, {2, 0}});

  CHECK_THROWS_AS(fiber_decomposition(id, {5, 5}), DomainError);
}

TEST_CASE("check_condition1_original examples", "[covering]") {
  CHECK(check_condition1_original(DigitalMap::identity(test_support::diamond()), x2).holds);

  const auto p = wrap12();
  const auto at_x3 = check_condition1_original(p, x3);
  REQUIRE_FALSE(at_x3.holds);
  CHECK(*at_x3.witness == Witness{MissingPreimagePoint{x3, Point{0}}});
  CHECK(certifies(p, *at_x3.witness));

  // At x_1 the fiber is {1,5,9}; its sheets stop at 10, while p(12) = x_0
  // lies in N(x_1,1). So the right end of the window breaks clause (1) here.
  const auto at_x1 = check_condition1_original(p, x1);
  REQUIRE_FALSE(at_x1.holds);
  CHECK(*at_x1.witness == Witness{MissingPreimagePoint{x1, Point{12}}});
  CHECK(certifies(p, *at_x1.witness));

  CHECK(check_condition1_original(p, x2).holds);
}

TEST_CASE("condition (1) agrees with a brute-force set computation", "[covering][property]") {
  for (const auto& m : sample_maps()) {
    const auto src = test_support::to_naive(m.source());
    const auto tgt = test_support::to_naive(m.target());
    const auto f = test_support::to_naive(m);
    for (const auto& b : m.target().points()) {
      const auto nb = naive::nbhd(tgt.points, tgt.kind, b);
      naive::PointSet pre, uni;
      for (const auto& e : src.points) {
        if (nb.count(f.at(e))) pre.insert(e);
        if (f.at(e) == b) {
          const auto s = naive::nbhd(src.points, src.kind, e);
          uni.insert(s.begin(), s.end());
        }
      }
      const auto v = check_condition1_original(m, b);
      REQUIRE(v.holds == (pre == uni));
      if (!v.holds) REQUIRE(certifies(m, *v.witness));
      const auto fd = fiber_decomposition(m, b);
      REQUIRE(fd.sheet_union == std::vector<Point>(uni.begin(), uni.end()));
      REQUIRE(fd.preimage_of_nbhd == std::vector<Point>(pre.begin(), pre.end()));
    }
  }
}

TEST_CASE("check_condition2_disjoint examples", "[covering]") {
  const auto p = wrap12();
  for (const auto& b : p.target().points()) CHECK(check_condition2_disjoint(p, b).holds);
  CHECK(check_condition2_disjoint(DigitalMap::identity(test_support::diamond()), x0).holds);

  const auto c = collapse({0, 1, 2});
  const auto v = check_condition2_disjoint(c, x0);
  REQUIRE_FALSE(v.holds);
  CHECK(*v.witness == Witness{OverlappingSheets{x0, Point{0}, Point{1}}});
  CHECK(certifies(c, *v.witness));
}

TEST_CASE("check_condition3 examples", "[covering]") {
  const auto p = wrap12();
  CHECK(check_condition3(p, x0, SheetMode::WL).holds);
  const auto iso = check_condition3(p, x0, SheetMode::ISO);
  REQUIRE_FALSE(iso.holds);
  CHECK(*iso.witness == Witness{CoveringFailure{x0, 3, Point{0}, Defect::NotOnto, x3, x0}});
  CHECK(certifies(p, *iso.witness));

  const auto d = double_cover();
  for (const auto& b : d.target().points()) CHECK(check_condition3(d, b, SheetMode::ISO).holds);
}

TEST_CASE("pseudocovering and covering predicate examples", "[covering]") {
  const auto id = DigitalMap::identity(test_support::diamond());
  CHECK(check_original_pseudocovering(id).holds);
  CHECK(check_digital_covering(id).holds);
  CHECK(check_revised_pseudocovering(id).holds);

  const auto p = wrap12();
  const auto orig = check_original_pseudocovering(p);
  REQUIRE_FALSE(orig.holds);
  // Base points come in lexicographic order: x_2, x_3, x_1, x_0.
  CHECK(*orig.witness == Witness{MissingPreimagePoint{x3, Point{0}}});
  CHECK(orig.per_base.size() == 4);
  CHECK(orig.per_base[0].b == x2);
  CHECK(orig.per_base[0].holds());
  CHECK_FALSE(orig.per_base[1].cond1);

  const auto cov = check_digital_covering(p);
  CHECK_FALSE(cov.holds);
  CHECK(cov.per_base[3].b == x0);
  CHECK(cov.per_base[3].cond3 == false);

  CHECK(check_revised_pseudocovering(p).holds);
  CHECK(check_wl_surjection(p).holds);

  const auto d = double_cover();
  CHECK(check_original_pseudocovering(d).holds);
  CHECK(check_digital_covering(d).holds);
  CHECK(check_wl_surjection(d).holds);

  const auto overlap = check_revised_pseudocovering(collapse({0, 1, 2}));
  CHECK_FALSE(overlap.holds);
  CHECK(overlap.per_base[0].cond2 == false);

  const auto inclusion = DigitalMap::from_function(
      DigitalImage(2, 2, {x0, x1}), test_support::diamond(), [](const Point& x) { return x; });
  const auto ns = check_wl_surjection(inclusion);
  REQUIRE_FALSE(ns.holds);
  CHECK(*ns.witness == Witness{NotSurjective{x2}});
}

TEST_CASE("check_inclusion_39 records strictness", "[covering]") {
  const auto p = wrap12();
  const auto r = check_inclusion_39(p);
  CHECK(r.holds);
  const auto& at_x3 = r.per_base[1];
  CHECK(at_x3.b == x3);
  CHECK(at_x3.cond1);
  CHECK_FALSE(at_x3.equality38);
  CHECK_FALSE(at_x3.cond2.has_value());
}

TEST_CASE("classify examples", "[covering]") {
  const auto w = classify(wrap12());
  CHECK(w.continuous.holds);
  CHECK(w.wl_surjection.holds);
  CHECK_FALSE(w.local_isomorphism.holds);
  CHECK_FALSE(w.pseudo_original.holds);
  CHECK(w.pseudo_revised.holds);
  CHECK_FALSE(w.covering.holds);

  const auto d = classify(double_cover());
  CHECK(d.continuous.holds);
  CHECK(d.wl_surjection.holds);
  CHECK(d.local_isomorphism.holds);
  CHECK(d.pseudo_original.holds);
  CHECK(d.pseudo_revised.holds);
  CHECK(d.covering.holds);

  const auto c = classify(collapse({0, 1}));
  CHECK(c.continuous.holds);
  CHECK_FALSE(c.wl_surjection.holds);
  CHECK_FALSE(c.local_isomorphism.holds);
  CHECK_FALSE(c.pseudo_original.holds);
  CHECK_FALSE(c.pseudo_revised.holds);
  CHECK_FALSE(c.covering.holds);
}

TEST_CASE("subset search picks an index set", "[covering]") {
  // Full fiber fails clause (2). The lone point {1} repairs clause (1) and
  // (2) but N(1) = {0,1,2} collapses onto x0, so no index set works.
  const auto r = check_original_pseudocovering(collapse({0, 1, 2}), true);
  CHECK_FALSE(check_original_pseudocovering(collapse({0, 1, 2})).holds);
  CHECK_FALSE(r.holds);
  REQUIRE(r.per_base.size() == 1);
  CHECK(r.per_base[0].index_set == chain({0, 1, 2}));

  // Without subset search the wrap map fails at x_3; a smaller M cannot add
  // the missing point 0 to the sheet union, so the answer is unchanged.
  const auto w = check_original_pseudocovering(wrap12(), true);
  CHECK_FALSE(w.holds);

  const auto d = check_original_pseudocovering(double_cover(), true);
  CHECK(d.holds);
  CHECK(d.per_base[0].index_set.size() == 2);
}

TEST_CASE("predicates agree with the naive oracle and witnesses certify",
          "[covering][property]") {
  for (const auto& m : sample_maps()) {
    const auto o = test_support::naive_classify(m);
    const auto c = classify(m);
    REQUIRE(c.continuous.holds == o.continuous);
    REQUIRE(c.wl_surjection.holds == (o.surjective && o.wl_iso));
    REQUIRE(c.local_isomorphism.holds == o.local_iso);
    REQUIRE(c.pseudo_original.holds == o.pseudo_original);
    REQUIRE(c.pseudo_revised.holds == o.pseudo_revised);
    REQUIRE(c.covering.holds == o.covering);
    for (const auto* r : {&c.wl_surjection, &c.pseudo_original, &c.pseudo_revised, &c.covering}) {
      if (!r->holds) REQUIRE(certifies(m, *r->witness));
    }
  }
}

TEST_CASE("implications between predicates on small maps", "[covering][property]") {
  for (const auto& m : sample_maps()) {
    const auto c = classify(m);
    if (c.covering) {
      REQUIRE(c.pseudo_original.holds);
      REQUIRE(c.pseudo_revised.holds);
    }
    if (c.pseudo_original) REQUIRE(c.pseudo_revised.holds);
    REQUIRE(c.pseudo_revised.holds == c.wl_surjection.holds);
    if (is_connected(m.source()) && is_connected(m.target())) {
      REQUIRE(c.covering.holds == (c.local_isomorphism.holds && is_surjective_map(m)));
    }
    if (c.wl_surjection) {
      for (const auto& base : check_inclusion_39(m).per_base) REQUIRE(base.cond1);
    }
  }
}
