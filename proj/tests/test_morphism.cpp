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

#include <functional>

#include "digicov/catalog.hpp"
#include "digicov/certify.hpp"
#include "digicov/morphism.hpp"
#include "digicov/oracle.hpp"
#include "support.hpp"

using namespace digicov;
using test_support::chain;

namespace {

// Every total map S -> T (not only surjections).
void for_each_map(const DigitalImage& s, const DigitalImage& t,
                  const std::function<void(const DigitalMap&)>& visit) {
  std::vector<DigitalMap::Index> a(s.size(), 0);
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == a.size()) {
      visit(DigitalMap(s, t, a));
      return;
    }
    for (DigitalMap::Index y = 0; y < t.size(); ++y) {
      a[i] = y;
      step(i + 1);
    }
  };
  step(0);
}

std::vector<DigitalImage> small_images() {
  EnumerationBounds b;
  b.max_points = 3;
  b.box = 3;
  auto imgs = enumerate_images(b);
  imgs.push_back(test_support::diamond());
  return imgs;
}

const Point q0{1, 0}, q1{0, 1}, q2{-1, 0}, q3{0, -1};

DigitalMap wrap12() { return wrap_map(scc_catalog("sc8-2-4"), 12); }

}  // namespace

TEST_CASE("DigitalMap construction validates the assignment", "[morphism]") {
  const DigitalImage s(1, 1, chain({0, 1}));
  const auto t = test_support::diamond();
  std::vector<std::pair<Point, Point>> partial{{Point{0}, q0}};
  CHECK_THROWS_AS(DigitalMap::from_pairs(s, t, partial), DomainError);
  std::vector<std::pair<Point, Point>> twice{{Point{0}, q0}, {Point{0}, q1}, {Point{1}, q1}};
  CHECK_THROWS_AS(DigitalMap::from_pairs(s, t, twice), DomainError);
  std::vector<std::pair<Point, Point>> outside{{Point{0}, q0}, {Point{1}, {5, 5}}};
  CHECK_THROWS_AS(DigitalMap::from_pairs(s, t, outside), DomainError);
  CHECK_THROWS_AS(DigitalMap(s, t, {0}), DomainError);
  CHECK_THROWS_AS(DigitalMap(s, t, {0, 9}), DomainError);
}

TEST_CASE("is_continuous examples", "[morphism]") {
  const auto d = test_support::diamond();
  CHECK(is_continuous(DigitalMap::identity(d)).holds);

  const DigitalImage point(2, 2, {q0});
  CHECK(is_continuous(DigitalMap::from_function(d, point, [](const Point&) { return q0; })).holds);

  const auto p = wrap12();
  CHECK(is_continuous(p).holds);
  CHECK(naive::continuous_on(test_support::to_naive(p), test_support::to_naive(p.source()).points,
                             p.source().kind(), test_support::to_naive(p.target()).points,
                             p.target().kind()));

  const DigitalImage pair(1, 1, chain({0, 1}));
  std::vector<std::pair<Point, Point>> jump{{Point{0}, q0}, {Point{1}, q2}};
  const auto f = DigitalMap::from_pairs(pair, d, jump);
  const auto v = is_continuous(f);
  REQUIRE_FALSE(v.holds);
  CHECK(*v.witness == Witness{NonContinuousAt{Point{0}, Point{1}}});
  CHECK(certifies(f, *v.witness));
}

TEST_CASE("is_isomorphism examples", "[morphism]") {
  const auto d = test_support::diamond();
  CHECK(is_isomorphism(DigitalMap::identity(d)).holds);

  const auto wrap = is_isomorphism(wrap12());
  REQUIRE_FALSE(wrap.holds);
  CHECK(*wrap.witness == Witness{NotInjective{Point{0}, Point{4}}});

  const DigitalImage pair(1, 1, chain({0, 1}));
  const std::vector<std::pair<Point, Point>> diag{{Point{0}, {0, 0}}, {Point{1}, {1, 1}}};
  const DigitalImage eight(2, 2, {{0, 0}, {1, 1}});
  CHECK(is_isomorphism(DigitalMap::from_pairs(pair, eight, diag)).holds);

  const DigitalImage four(1, 2, {{0, 0}, {1, 1}});
  const auto into_four = DigitalMap::from_pairs(pair, four, diag);
  const auto v = is_isomorphism(into_four);
  REQUIRE_FALSE(v.holds);
  CHECK(*v.witness == Witness{NonContinuousAt{Point{0}, Point{1}}});
  CHECK(certifies(into_four, *v.witness));

  // The inverse direction: two isolated points onto an adjacent pair.
  const DigitalImage apart(1, 1, chain({0, 2}));
  const auto spread =
      DigitalMap::from_function(apart, pair, [](const Point& x) { return Point{x[0] / 2}; });
  const auto inv = is_isomorphism(spread);
  REQUIRE_FALSE(inv.holds);
  CHECK(*inv.witness == Witness{InverseNotContinuousAt{Point{0}, Point{1}}});
  CHECK(certifies(spread, *inv.witness));
}

TEST_CASE("restrict examples", "[morphism]") {
  const auto d = test_support::diamond();
  const std::vector<Point> s{q0, q1};
  const auto r = restrict(DigitalMap::identity(d), s, s);
  CHECK(r == DigitalMap::identity(DigitalImage(d.kind(), s)));

  const auto p = wrap12();
  const auto local = restrict(p, chain({0, 1, 2}), neighborhood(p.target(), q1).members);
  CHECK(local.source().size() == 3);
  CHECK(local.target().size() == 3);
  CHECK(local.source().kind() == p.source().kind());
  CHECK(is_isomorphism(local).holds);

  CHECK_THROWS_AS(restrict(p, chain({0, 1, 2}), {q0, q1}), DomainError);
  CHECK_THROWS_AS(restrict(p, chain({40}), {q0}), DomainError);
}

TEST_CASE("is_local_isomorphism examples", "[morphism]") {
  CHECK(is_local_isomorphism(DigitalMap::identity(test_support::diamond())).holds);

  const auto p = wrap12();
  const auto v = is_local_isomorphism(p);
  REQUIRE_FALSE(v.holds);
  // |N(0,1)| = 2 but |N(x_0,1)| = 3; the first target point left over in
  // lexicographic order is x_3 = (0,-1).
  CHECK(neighborhood(p.source(), {0}).size() == 2);
  CHECK(neighborhood(p.target(), q0).size() == 3);
  CHECK(*v.witness == Witness{LocalFailure{Point{0}, Defect::NotOnto, q3, q0}});
  CHECK(certifies(p, *v.witness));

  const auto cover = cyclic_cover(scc_catalog("sc8-2-8"), scc_catalog("sc8-2-4"));
  CHECK(is_local_isomorphism(cover).holds);
}

TEST_CASE("is_wl_isomorphism examples", "[morphism]") {
  CHECK(is_wl_isomorphism(wrap12()).holds);

  const DigitalImage pair(1, 1, chain({0, 1}));
  const DigitalImage point(2, 2, {q0});
  const auto collapse = DigitalMap::from_function(pair, point, [](const Point&) { return q0; });
  const auto v = is_wl_isomorphism(collapse);
  REQUIRE_FALSE(v.holds);
  CHECK(*v.witness == Witness{LocalFailure{Point{0}, Defect::NotInjective, Point{0}, Point{1}}});
  CHECK(certifies(collapse, *v.witness));
}

TEST_CASE("compose", "[morphism]") {
  const auto p = wrap12();
  CHECK(compose(DigitalMap::identity(p.source()), p) == p);
  CHECK(compose(p, DigitalMap::identity(p.target())) == p);
  CHECK_THROWS_AS(compose(p, p), DomainError);
}

TEST_CASE("composition of continuous maps is continuous", "[morphism][property]") {
  const DigitalImage a(1, 1, chain({0, 1, 2}));
  const DigitalImage b(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  const DigitalImage c(1, 2, {{0, 0}, {0, 1}});
  int pairs = 0;
  for_each_map(a, b, [&](const DigitalMap& f) {
    if (!is_continuous(f)) return;
    for_each_map(b, c, [&](const DigitalMap& g) {
      if (!is_continuous(g)) return;
      ++pairs;
      REQUIRE(is_continuous(compose(f, g)).holds);
    });
  });
  CHECK(pairs > 0);
}

TEST_CASE("iso => local iso => WL iso, with certified witnesses", "[morphism][property]") {
  const auto imgs = small_images();
  std::size_t maps = 0;
  for (const auto& s : imgs) {
    for (const auto& t : imgs) {
      if (s.size() > 3 || t.size() > 3) continue;
      for_each_map(s, t, [&](const DigitalMap& f) {
        ++maps;
        const auto iso = is_isomorphism(f);
        const auto local = is_local_isomorphism(f);
        const auto wl = is_wl_isomorphism(f);
        const auto cont = is_continuous(f);
        if (iso) REQUIRE(local.holds);
        if (local) REQUIRE(wl.holds);
        if (wl) REQUIRE(cont.holds);
        for (const auto* v : {&iso, &local, &wl, &cont}) {
          if (!v->holds) REQUIRE(certifies(f, *v->witness));
        }
        const auto oracle = test_support::naive_classify(f);
        REQUIRE(oracle.isomorphism == iso.holds);
        REQUIRE(oracle.local_iso == local.holds);
        REQUIRE(oracle.wl_iso == wl.holds);
        REQUIRE(oracle.continuous == cont.holds);
      });
    }
  }
  CHECK(maps > 1000);
}

TEST_CASE("local checks agree with the restriction route", "[morphism][property]") {
  const auto imgs = small_images();
  for (const auto& s : imgs) {
    for (const auto& t : imgs) {
      if (s.size() > 3 || t.size() > 3) continue;
      for_each_map(s, t, [&](const DigitalMap& f) {
        for (const auto& x : s.points()) {
          const auto i = s.index_of(x);
          for (auto mode : {LocalMode::Full, LocalMode::Image}) {
            bool via_restriction = false;
            try {
              via_restriction = is_isomorphism(local_restriction(f, x, mode)).holds;
            } catch (const DomainError&) {
              via_restriction = false;
            }
            REQUIRE(via_restriction == !detail::local_defect(f, i, mode).has_value());
          }
        }
      });
    }
  }
}

TEST_CASE("local isomorphism onto a connected image is surjective", "[morphism][property]") {
  const auto imgs = small_images();
  int local_isos = 0;
  for (const auto& s : imgs) {
    for (const auto& t : imgs) {
      if (s.size() > 3 || t.size() > 4 || !is_connected(t)) continue;
      for_each_map(s, t, [&](const DigitalMap& f) {
        if (!is_local_isomorphism(f)) return;
        ++local_isos;
        REQUIRE(is_surjective_map(f));
      });
    }
  }
  CHECK(local_isos > 0);
}
