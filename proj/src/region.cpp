#include "taz/region.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "taz/check.hpp"

namespace taz {

std::string Region::to_string() const {
  std::ostringstream out;
  for (size_t x = 1; x < bands.size(); ++x) {
    if (x > 1) out << ' ';
    const ClockBand& b = bands[x];
    switch (b.kind) {
      case Band::point: out << 'x' << x << '=' << b.c; break;
      case Band::open: out << b.c - 1 << "<x" << x << '<' << b.c; break;
      case Band::beyond: out << 'x' << x << ">max"; break;
    }
  }
  out << " |";
  for (const auto& g : fract_groups) {
    out << " (";
    for (size_t i = 0; i < g.size(); ++i) {
      if (i) out << ',';
      out << 'x' << g[i];
    }
    out << ')';
  }
  return out.str();
}

// ── region enumeration ──────────────────────────────────────────────────

namespace {

// all ways to split `elems` into an ordered sequence of nonempty groups
void ordered_partitions(const std::vector<int>& elems, unsigned remaining,
                        std::vector<std::vector<int>>& cur,
                        std::vector<std::vector<std::vector<int>>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  const unsigned n = elems.size();
  for (unsigned sub = 1; sub < (1u << n); ++sub) {
    if ((sub & remaining) != sub) continue;
    std::vector<int> group;
    for (unsigned i = 0; i < n; ++i)
      if (sub & (1u << i)) group.push_back(elems[i]);
    cur.push_back(std::move(group));
    ordered_partitions(elems, remaining & ~sub, cur, out);
    cur.pop_back();
  }
}

void enforce_enumeration_scale(const BoundVec& alpha) {
  if (alpha.clocks() < 1 || alpha.clocks() > 4)
    throw std::invalid_argument("region enumeration supports 1 to 4 clocks");
  for (int x = 1; x <= alpha.clocks(); ++x) {
    const int64_t a = alpha.get(x);
    if (a != BoundVec::kNone && (a < 0 || a > 6))
      throw std::invalid_argument(
          "region enumeration supports finite bounds in [0, 6]");
  }
}

}  // namespace

std::vector<Region> enumerate_regions(const BoundVec& alpha) {
  enforce_enumeration_scale(alpha);
  const int k = alpha.clocks();

  std::vector<std::vector<Region::ClockBand>> per_clock(k + 1);
  for (int x = 1; x <= k; ++x) {
    const int64_t a = alpha.get(x);
    if (a == BoundVec::kNone) {
      per_clock[x].push_back({Region::Band::beyond, 0});
      continue;
    }
    for (int64_t c = 0; c <= a; ++c) {
      per_clock[x].push_back({Region::Band::point, c});
      if (c >= 1) per_clock[x].push_back({Region::Band::open, c});
    }
    per_clock[x].push_back({Region::Band::beyond, 0});
  }

  std::vector<Region> out;
  std::vector<int> pick(k + 1, 0);
  for (;;) {
    Region r;
    r.bands.resize(k + 1);
    std::vector<int> open_clocks;
    for (int x = 1; x <= k; ++x) {
      r.bands[x] = per_clock[x][pick[x]];
      if (r.bands[x].kind == Region::Band::open) open_clocks.push_back(x);
    }
    if (open_clocks.empty()) {
      out.push_back(r);
    } else {
      std::vector<std::vector<std::vector<int>>> parts;
      std::vector<std::vector<int>> cur;
      ordered_partitions(open_clocks, (1u << open_clocks.size()) - 1, cur,
                         parts);
      for (auto& p : parts) {
        Region q = r;
        q.fract_groups = std::move(p);
        out.push_back(std::move(q));
      }
    }
    int x = 1;
    while (x <= k && ++pick[x] == int(per_clock[x].size())) pick[x++] = 0;
    if (x > k) break;
  }
  return out;
}

// ── region graphs ───────────────────────────────────────────────────────

Dbm region_graph(const Region& r, const BoundVec& alpha) {
  const int k = int(r.bands.size()) - 1;
  assert(alpha.clocks() == k);
  Dbm g(k);
  for (int x = 1; x <= k; ++x) {
    const Region::ClockBand& b = r.bands[x];
    switch (b.kind) {
      case Region::Band::point:
        g.set(0, x, Weight::le(b.c));
        g.set(x, 0, Weight::le(-b.c));
        break;
      case Region::Band::open:
        g.set(0, x, Weight::lt(b.c));
        g.set(x, 0, Weight::lt(-(b.c - 1)));
        break;
      case Region::Band::beyond:
        if (alpha.get(x) != BoundVec::kNone)
          g.set(x, 0, Weight::lt(-alpha.get(x)));
        break;
    }
  }
  // clocks in open bands: equal fractional parts inside a group, strictly
  // increasing across groups
  for (size_t gi = 0; gi < r.fract_groups.size(); ++gi)
    for (size_t gj = gi; gj < r.fract_groups.size(); ++gj)
      for (int x : r.fract_groups[gi])
        for (int y : r.fract_groups[gj]) {
          if (x == y) continue;
          const int64_t cx = r.bands[x].c, cy = r.bands[y].c;
          if (gi == gj) {
            g.set(x, y, Weight::le(cy - cx));
            g.set(y, x, Weight::le(cx - cy));
          } else {
            g.set(x, y, Weight::lt(cy - cx + 1));
            g.set(y, x, Weight::lt(cx - cy));
          }
        }
  g.canonicalize();
  check(!g.is_empty(), "region graph must be nonempty");
  return g;
}

// ── intersection and closure inclusion ──────────────────────────────────

bool region_intersects_zone(const Region& r, const Dbm& z,
                            const BoundVec& alpha) {
  assert(z.canonical());
  const Dbm g = region_graph(r, alpha);
  assert(g.dim() == z.dim());

  // a mixed cycle of total weight below (<=,0) through one zone edge and
  // one region edge witnesses emptiness
  bool empty_by_cycle = false;
  for (int x = 0; x < z.dim() && !empty_by_cycle; ++x)
    for (int y = 0; y < z.dim(); ++y) {
      if (z.at(y, x) + g.at(x, y) < Weight::le(0)) {
        empty_by_cycle = true;
        break;
      }
    }

  Dbm meet = min_graph(g, z);
  meet.canonicalize();
  const bool empty_by_meet = meet.is_empty();

  check(empty_by_cycle == empty_by_meet,
        "region/zone intersection: cycle test and canonicalized meet "
        "disagree");
  return !empty_by_cycle;
}

bool closure_inclusion(const Dbm& z, const Dbm& z2, const BoundVec& alpha) {
  assert(z.canonical() && z2.canonical());
  if (z.is_empty()) return true;
  if (z2.is_empty()) return false;
  for (const Region& r : enumerate_regions(alpha))
    if (region_intersects_zone(r, z, alpha) &&
        !region_intersects_zone(r, z2, alpha))
      return false;
  return true;
}

// ── least region edge ───────────────────────────────────────────────────

namespace {

Weight min_region_edge_closed(const Dbm& z, int x, int y,
                              const BoundVec& alpha) {
  if (x == 0) {
    // least upper-bound edge: the lowest band of clock y that z reaches
    const int64_t ay = alpha.get(y);
    if (ay == BoundVec::kNone) return Weight::inf();
    if (z.at(y, 0) < Weight::le(-ay)) return Weight::inf();
    return z.at(y, 0).negated().ceil();
  }
  if (y == 0) {
    // least lower-bound edge: the deepest band of clock x that z reaches,
    // never deeper than the band beyond alpha_x
    const int64_t ax = alpha.get(x);
    if (ax == BoundVec::kNone) return Weight::le(0);
    Weight best = Weight::lt(-ax);
    if (!z.at(0, x).is_inf())
      best = weight_max(best, z.at(0, x).negated().ceil());
    return best;
  }
  // difference edge x -> y: unconstrained once clock y can leave its bands;
  // otherwise the deepest reachable combination of y's band against x's
  const int64_t ax = alpha.get(x), ay = alpha.get(y);
  if (ay == BoundVec::kNone) return Weight::inf();
  if (z.at(y, 0) < Weight::le(-ay)) return Weight::inf();
  Weight best = (ax == BoundVec::kNone)
                    ? z.at(y, 0).negated().ceil()
                    : z.at(y, 0).negated().ceil() + Weight::lt(-ax);
  if (!z.at(y, x).is_inf())
    best = weight_max(best, z.at(y, x).negated().ceil());
  return best;
}

}  // namespace

Weight min_region_edge(const Dbm& z, int x, int y, const BoundVec& alpha) {
  assert(z.canonical() && !z.is_empty());
  assert(x != y && x >= 0 && y >= 0 && x < z.dim() && y < z.dim());
  assert(alpha.clocks() == z.clocks());

  const Weight closed = min_region_edge_closed(z, x, y, alpha);

  Weight by_enum = Weight::inf();
  bool met_any = false;
  for (const Region& r : enumerate_regions(alpha)) {
    if (!region_intersects_zone(r, z, alpha)) continue;
    met_any = true;
    by_enum = weight_min(by_enum, region_graph(r, alpha).at(x, y));
  }
  check(met_any, "a nonempty zone must meet at least one region");
  check(closed == by_enum,
        "least region edge: closed form and enumeration disagree for edge (" +
            std::to_string(x) + "," + std::to_string(y) + ")");
  return closed;
}

// ── valuations on the half-integer grid ─────────────────────────────────

bool dbm_contains(const Dbm& z, const HalfVal& hv) {
  assert(int(hv.size()) == z.dim() && hv[0] == 0);
  for (int x = 0; x < z.dim(); ++x)
    for (int y = 0; y < z.dim(); ++y) {
      const Weight w = z.at(x, y);
      if (w.is_inf()) continue;
      const int64_t diff = hv[y] - hv[x];
      if (w.strict() ? diff >= 2 * w.value() : diff > 2 * w.value())
        return false;
    }
  return true;
}

bool region_contains(const Region& r, const HalfVal& hv,
                     const BoundVec& alpha) {
  const int k = int(r.bands.size()) - 1;
  assert(int(hv.size()) == k + 1 && hv[0] == 0 && alpha.clocks() == k);
  for (int x = 1; x <= k; ++x) {
    const Region::ClockBand& b = r.bands[x];
    switch (b.kind) {
      case Region::Band::point:
        if (hv[x] != 2 * b.c) return false;
        break;
      case Region::Band::open:
        if (hv[x] <= 2 * (b.c - 1) || hv[x] >= 2 * b.c) return false;
        break;
      case Region::Band::beyond:
        // x > alpha_x, or just x >= 0 when the clock has no bound
        if (alpha.get(x) != BoundVec::kNone && hv[x] <= 2 * alpha.get(x))
          return false;
        break;
    }
  }
  std::vector<int64_t> twice_fract(k + 1, -1);
  for (int x = 1; x <= k; ++x)
    if (r.bands[x].kind == Region::Band::open)
      twice_fract[x] = hv[x] - 2 * (r.bands[x].c - 1);
  int64_t prev = -1;
  for (const auto& g : r.fract_groups) {
    assert(!g.empty());
    const int64_t f = twice_fract[g[0]];
    for (int x : g)
      if (twice_fract[x] != f) return false;
    if (f <= prev) return false;
    prev = f;
  }
  return true;
}

bool lu_preorder_le(const HalfVal& v1, const HalfVal& v2, const LuBounds& lu) {
  assert(v1.size() == v2.size() && v1[0] == 0 && v2[0] == 0);
  for (size_t x = 1; x < v1.size(); ++x) {
    if (v1[x] == v2[x]) continue;
    if (v1[x] < v2[x]) {
      const int64_t l = lu.lower.get(int(x));
      if (l != BoundVec::kNone && v1[x] <= 2 * l) return false;
    } else {
      const int64_t u = lu.upper.get(int(x));
      if (u != BoundVec::kNone && v2[x] <= 2 * u) return false;
    }
  }
  return true;
}

bool sampled_alu_membership(const Dbm& z, const HalfVal& v,
                            const LuBounds& lu) {
  assert(z.canonical());
  const int k = z.clocks();
  if (k > 4)
    throw std::invalid_argument("sampled membership supports up to 4 clocks");
  int64_t cap = 0;
  for (int x = 1; x <= k; ++x) {
    if (lu.lower.get(x) != BoundVec::kNone)
      cap = std::max(cap, lu.lower.get(x));
    if (lu.upper.get(x) != BoundVec::kNone)
      cap = std::max(cap, lu.upper.get(x));
    cap = std::max(cap, (v[x] + 1) / 2);
  }
  for (int x = 0; x < z.dim(); ++x)
    for (int y = 0; y < z.dim(); ++y)
      if (!z.at(x, y).is_inf())
        cap = std::max(cap, std::abs(z.at(x, y).value()));
  cap += 2;
  if (cap > 10)
    throw std::invalid_argument("sampled membership supports bounds up to 8");

  HalfVal w(k + 1, 0);
  for (;;) {
    if (dbm_contains(z, w) && lu_preorder_le(w, v, lu)) return true;
    int x = 1;
    while (x <= k && ++w[x] > 2 * cap) w[x++] = 0;
    if (x > k) return false;
  }
}

}  // namespace taz
