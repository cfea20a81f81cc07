#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "taz/region.hpp"

using namespace taz;

namespace {

BoundVec alpha1(int64_t a) {
  BoundVec v(1);
  if (a != BoundVec::kNone) v.set(1, a);
  return v;
}

BoundVec alpha2(int64_t a, int64_t b) {
  BoundVec v(2);
  if (a != BoundVec::kNone) v.set(1, a);
  if (b != BoundVec::kNone) v.set(2, b);
  return v;
}

Region::ClockBand point(int64_t c) { return {Region::Band::point, c}; }
Region::ClockBand open_below(int64_t c) { return {Region::Band::open, c}; }
Region::ClockBand beyond() { return {Region::Band::beyond, 0}; }

}  // namespace

// ── enumeration ──────────────────────────────────────────────────────────

TEST_CASE("region counts match the hand-computed values") {
  CHECK(enumerate_regions(alpha1(1)).size() == 4);
  CHECK(enumerate_regions(alpha1(2)).size() == 6);
  CHECK(enumerate_regions(alpha1(BoundVec::kNone)).size() == 1);
  CHECK(enumerate_regions(alpha2(0, 0)).size() == 4);
  CHECK(enumerate_regions(alpha2(1, 1)).size() == 18);
  CHECK(enumerate_regions(alpha2(2, 1)).size() == 28);
  CHECK(enumerate_regions(alpha2(3, 3)).size() == 82);
}

TEST_CASE("enumeration scale limits are enforced") {
  CHECK_THROWS_AS(enumerate_regions(alpha1(7)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_regions(BoundVec(5)), std::invalid_argument);
}

TEST_CASE("regions partition the half grid") {
  const BoundVec alpha = alpha2(2, 1);
  const auto regs = enumerate_regions(alpha);
  for (int64_t hx = 0; hx <= 8; ++hx)
    for (int64_t hy = 0; hy <= 8; ++hy) {
      const HalfVal hv = {0, hx, hy};
      int owners = 0;
      for (const Region& r : regs) {
        if (!region_contains(r, hv, alpha)) continue;
        ++owners;
        // combinatorial membership matches the region's distance graph
        CHECK(dbm_contains(region_graph(r, alpha), hv));
      }
      CHECK(owners == 1);
    }
}

TEST_CASE("region graphs of the basic band shapes") {
  const BoundVec a2 = alpha1(2);

  Region pt{{{}, point(2)}, {}};
  Dbm g = region_graph(pt, a2);
  CHECK(g.at(0, 1) == Weight::le(2));
  CHECK(g.at(1, 0) == Weight::le(-2));

  Region op{{{}, open_below(2)}, {{1}}};
  g = region_graph(op, a2);
  CHECK(g.at(0, 1) == Weight::lt(2));
  CHECK(g.at(1, 0) == Weight::lt(-1));

  Region bey{{{}, beyond()}, {}};
  g = region_graph(bey, a2);
  CHECK(g.at(0, 1).is_inf());
  CHECK(g.at(1, 0) == Weight::lt(-2));

  // a clock never compared against anything: one band covering x >= 0
  Region any{{{}, beyond()}, {}};
  g = region_graph(any, alpha1(BoundVec::kNone));
  CHECK(g.at(0, 1).is_inf());
  CHECK(g.at(1, 0) == Weight::le(0));
}

TEST_CASE("fractional ordering shapes two-clock region graphs") {
  const BoundVec alpha = alpha2(2, 2);

  // both clocks in (1,2), equal fractional parts: x - y == 0
  Region same{{{}, open_below(2), open_below(2)}, {{1, 2}}};
  Dbm g = region_graph(same, alpha);
  CHECK(g.at(1, 2) == Weight::le(0));
  CHECK(g.at(2, 1) == Weight::le(0));
  CHECK(region_contains(same, {0, 3, 3}, alpha));
  CHECK_FALSE(region_contains(same, {0, 3, 2}, alpha));

  // x's fraction strictly below y's: 0 < y - x < 1
  Region split{{{}, open_below(2), open_below(2)}, {{1}, {2}}};
  g = region_graph(split, alpha);
  CHECK(g.at(1, 2) == Weight::lt(1));
  CHECK(g.at(2, 1) == Weight::lt(0));
  CHECK_FALSE(region_contains(split, {0, 3, 3}, alpha));
}

// ── intersection and closure ─────────────────────────────────────────────

TEST_CASE("regions intersecting an interval zone") {
  const BoundVec alpha = alpha1(2);
  const Dbm z = intersect_guard(Dbm::universe(1),
                                {{1, CmpOp::ge, 0}, {1, CmpOp::le, 1}});
  int meets = 0;
  for (const Region& r : enumerate_regions(alpha))
    if (region_intersects_zone(r, z, alpha)) ++meets;
  CHECK(meets == 3);  // the points 0 and 1 and the interval between them
}

TEST_CASE("both intersection routes stay in agreement") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> opd(0, 4);
  std::uniform_int_distribution<int> bound(0, 4);
  std::uniform_int_distribution<int> nguards(1, 3);
  const BoundVec alphas[] = {alpha2(2, 3), alpha2(2, BoundVec::kNone),
                             alpha2(0, 1)};
  for (const BoundVec& alpha : alphas) {
    const auto regs = enumerate_regions(alpha);
    for (int t = 0; t < 40; ++t) {
      ClockGuard g;
      const int n = nguards(rng);
      for (int i = 0; i < n; ++i)
        g.push_back({1 + (t + i) % 2, static_cast<CmpOp>(opd(rng)),
                     bound(rng)});
      const Dbm z = intersect_guard(Dbm::universe(2), g);
      if (z.is_empty()) continue;
      // region_intersects_zone cross-checks its two routes internally
      // and throws on disagreement
      for (const Region& r : regs) region_intersects_zone(r, z, alpha);
    }
  }
}

TEST_CASE("closure inclusion by enumeration") {
  const BoundVec alpha = alpha1(2);
  const Dbm p5 = intersect_guard(Dbm::universe(1), {{1, CmpOp::eq, 5}});
  const Dbm p7 = intersect_guard(Dbm::universe(1), {{1, CmpOp::eq, 7}});
  const Dbm p1 = intersect_guard(Dbm::universe(1), {{1, CmpOp::eq, 1}});
  const Dbm p2 = intersect_guard(Dbm::universe(1), {{1, CmpOp::eq, 2}});

  // both beyond the bound: the same region covers them
  CHECK(closure_inclusion(p7, p5, alpha));
  CHECK(closure_inclusion(p5, p7, alpha));
  // distinct point regions below the bound
  CHECK_FALSE(closure_inclusion(p1, p2, alpha));

  Dbm empty = intersect_guard(p1, {{1, CmpOp::eq, 2}});
  REQUIRE(empty.is_empty());
  CHECK(closure_inclusion(empty, p1, alpha));
  CHECK_FALSE(closure_inclusion(p1, empty, alpha));
}

// ── least region edges over a zone ───────────────────────────────────────

TEST_CASE("least region edge weights over one-clock zones") {
  const BoundVec alpha = alpha1(2);
  const Dbm z = intersect_guard(Dbm::universe(1),
                                {{1, CmpOp::ge, 1}, {1, CmpOp::le, 3}});
  CHECK(min_region_edge(z, 1, 0, alpha) == Weight::lt(-2));
  CHECK(min_region_edge(z, 0, 1, alpha) == Weight::le(1));

  const Dbm pin = intersect_guard(Dbm::universe(1), {{1, CmpOp::eq, 1}});
  CHECK(min_region_edge(pin, 0, 1, alpha) == Weight::le(1));
  CHECK(min_region_edge(pin, 1, 0, alpha) == Weight::le(-1));
}

TEST_CASE("least region edge weights across two clocks") {
  const BoundVec alpha = alpha2(2, 2);
  const Dbm z = intersect_guard(Dbm::universe(2),
                                {{1, CmpOp::ge, 3}, {2, CmpOp::eq, 0}});
  CHECK(min_region_edge(z, 1, 2, alpha) == Weight::lt(-2));
  CHECK(min_region_edge(z, 2, 1, alpha).is_inf());

  // a clock with no bound at all: no region constrains it from above
  const BoundVec mixed = alpha2(2, BoundVec::kNone);
  const Dbm w = intersect_guard(Dbm::universe(2), {{2, CmpOp::ge, 1}});
  CHECK(min_region_edge(w, 0, 2, mixed).is_inf());
  CHECK(min_region_edge(w, 2, 0, mixed) == Weight::le(0));
  CHECK(min_region_edge(w, 1, 2, mixed).is_inf());
}

TEST_CASE("closed-form edges survive random stress") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> opd(0, 4);
  std::uniform_int_distribution<int> bound(0, 4);
  std::uniform_int_distribution<int> pick(0, 3);
  const BoundVec alphas[] = {alpha2(2, 2), alpha2(3, 1),
                             alpha2(BoundVec::kNone, 2), alpha2(0, 3)};
  int nonempty = 0;
  for (int t = 0; t < 120; ++t) {
    ClockGuard g;
    for (int i = 0; i < 2; ++i)
      g.push_back({1 + i, static_cast<CmpOp>(opd(rng)), bound(rng)});
    const Dbm z = intersect_guard(Dbm::universe(2), g);
    if (z.is_empty()) continue;
    ++nonempty;
    const BoundVec& alpha = alphas[pick(rng)];
    // min_region_edge cross-checks the closed form against enumeration
    // internally and throws on disagreement
    for (int x = 0; x <= 2; ++x)
      for (int y = 0; y <= 2; ++y)
        if (x != y) min_region_edge(z, x, y, alpha);
  }
  CHECK(nonempty > 60);
}

// ── valuations and the lower/upper preorder ──────────────────────────────

TEST_CASE("half-grid membership in zones and regions") {
  CHECK(dbm_contains(Dbm::zero(2), {0, 0, 0}));
  CHECK_FALSE(dbm_contains(Dbm::zero(2), {0, 1, 0}));

  const Dbm diag = elapse(Dbm::zero(2));
  CHECK(dbm_contains(diag, {0, 3, 3}));
  CHECK_FALSE(dbm_contains(diag, {0, 3, 2}));

  const Dbm band = intersect_guard(Dbm::universe(1),
                                   {{1, CmpOp::gt, 1}, {1, CmpOp::le, 2}});
  CHECK(dbm_contains(band, {0, 3}));
  CHECK(dbm_contains(band, {0, 4}));
  CHECK_FALSE(dbm_contains(band, {0, 2}));
  CHECK_FALSE(dbm_contains(band, {0, 5}));

  const BoundVec a2 = alpha1(2);
  Region pt{{{}, point(2)}, {}};
  CHECK(region_contains(pt, {0, 4}, a2));
  CHECK_FALSE(region_contains(pt, {0, 3}, a2));
  Region op{{{}, open_below(2)}, {{1}}};
  CHECK(region_contains(op, {0, 3}, a2));
  CHECK_FALSE(region_contains(op, {0, 2}, a2));
  CHECK_FALSE(region_contains(op, {0, 4}, a2));
  Region bey{{{}, beyond()}, {}};
  CHECK(region_contains(bey, {0, 5}, a2));
  CHECK_FALSE(region_contains(bey, {0, 4}, a2));
}

TEST_CASE("lower/upper preorder on valuations") {
  LuBounds lu(1);
  lu.lower.set(1, 1);
  lu.upper.set(1, 3);

  CHECK(lu_preorder_le({0, 4}, {0, 4}, lu));
  CHECK(lu_preorder_le({0, 4}, {0, 5}, lu));   // 2 above L, below 2.5
  CHECK(lu_preorder_le({0, 8}, {0, 7}, lu));   // 3.5 above U, below 4
  CHECK_FALSE(lu_preorder_le({0, 2}, {0, 4}, lu));  // 1 not above L
  CHECK_FALSE(lu_preorder_le({0, 6}, {0, 5}, lu));  // 2.5 not above U
}

TEST_CASE("sampled membership below the preorder") {
  LuBounds lu(1);
  lu.lower.set(1, 2);
  lu.upper.set(1, 2);

  const Dbm low = intersect_guard(Dbm::universe(1), {{1, CmpOp::le, 2}});
  CHECK(sampled_alu_membership(low, {0, 3}, lu));        // its own point
  CHECK_FALSE(sampled_alu_membership(low, {0, 7}, lu));  // nothing above U

  const Dbm high = intersect_guard(Dbm::universe(1), {{1, CmpOp::ge, 3}});
  CHECK(sampled_alu_membership(high, {0, 9}, lu));       // 3 covers 4.5
  CHECK_FALSE(sampled_alu_membership(high, {0, 3}, lu));
}
