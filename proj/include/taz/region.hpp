#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taz/bounds.hpp"
#include "taz/dbm.hpp"

namespace taz {

// One region of the classic bound-parameterized partition of clock space.
// Per clock, one band: a point x == c (0 <= c <= alpha_x), an open unit
// interval c-1 < x < c (1 <= c <= alpha_x), or everything beyond alpha_x.
// A clock with alpha_x == -infinity has the single band x >= 0.
// Clocks sitting in open bands are further ordered by fractional part:
// fract_groups lists them grouped by equal fraction, smallest group first.
struct Region {
  enum class Band : uint8_t { point, open, beyond };
  struct ClockBand {
    Band kind;
    int64_t c;  // point: x == c; open: c-1 < x < c; unused for beyond
  };

  std::vector<ClockBand> bands;  // index 1..clocks, [0] unused
  std::vector<std::vector<int>> fract_groups;

  std::string to_string() const;
};

// All regions for the given bounds. Deliberately brute-force and only for
// cross-checking: at most 4 clocks and finite bounds at most 6, enforced.
std::vector<Region> enumerate_regions(const BoundVec& alpha);

// canonical distance graph of one region; never empty
Dbm region_graph(const Region& r, const BoundVec& alpha);

// Whether the region meets the zone. Computed two independent ways, which
// must agree: the sign test "some Z_yx + R_xy < (<=,0)" on the raw graphs,
// and emptiness of the canonicalized entrywise minimum.
bool region_intersects_zone(const Region& r, const Dbm& z,
                            const BoundVec& alpha);

// z included in the union of all alpha-regions meeting z2, by enumeration
bool closure_inclusion(const Dbm& z, const Dbm& z2, const BoundVec& alpha);

// Least weight of edge (x, y) over all region graphs of regions meeting z;
// (<, inf) when every intersecting region leaves the edge unconstrained.
// Computed by closed form and cross-checked against plain enumeration;
// disagreement is a hard failure. Enumeration limits apply.
Weight min_region_edge(const Dbm& z, int x, int y, const BoundVec& alpha);

// Valuations on the half-integer grid, stored doubled so they stay exact:
// hv[x] is twice the value of clock x, hv[0] == 0.
using HalfVal = std::vector<int64_t>;

bool dbm_contains(const Dbm& z, const HalfVal& hv);
bool region_contains(const Region& r, const HalfVal& hv, const BoundVec& alpha);

// v1 below v2 in the lower/upper simulation preorder: per clock, equal, or
// L(x) < v1[x] < v2[x], or U(x) < v2[x] < v1[x]
bool lu_preorder_le(const HalfVal& v1, const HalfVal& v2, const LuBounds& lu);

// Whether some zone valuation on the half-integer grid is below v in the
// lower/upper preorder. Sound when true; a false answer only rules out
// grid witnesses. Enumeration limits apply (small dimension, small bounds).
bool sampled_alu_membership(const Dbm& z, const HalfVal& v,
                            const LuBounds& lu);

}  // namespace taz
