#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taz/weight.hpp"

namespace taz {

enum class CmpOp : uint8_t { lt, le, eq, ge, gt };

std::string cmp_op_text(CmpOp op);

// one conjunct of a guard: clock <op> bound, clock given as its dbm index
struct ClockConstraint {
  int clock;
  CmpOp op;
  int64_t bound;
  friend bool operator==(const ClockConstraint&,
                         const ClockConstraint&) = default;
};

using ClockGuard = std::vector<ClockConstraint>;

// Distance graph over clocks 1..k plus the reference clock 0 (always equal
// to zero). Entry (x, y) is the weight of the edge x -> y, that is, the
// constraint y - x <= c or y - x < c. A clock's upper bound therefore
// lives at (0, x) and its lower bound at (x, 0).
//
// The canonical flag tracks whether the matrix is known to hold all-pairs
// shortest paths; set() clears it, canonicalize() restores it and decides
// emptiness. Operations documented as requiring canonical input assert it.
class Dbm {
 public:
  // zone with no constraints beyond clock nonnegativity
  explicit Dbm(int clocks);

  static Dbm universe(int clocks) { return Dbm(clocks); }
  // every clock equal to zero
  static Dbm zero(int clocks);

  int dim() const { return dim_; }
  int clocks() const { return dim_ - 1; }

  Weight at(int x, int y) const { return m_[x * dim_ + y]; }
  // direct write; drops the canonical flag
  void set(int x, int y, Weight w) {
    m_[x * dim_ + y] = w;
    canonical_ = false;
  }

  bool canonical() const { return canonical_; }

  // all-pairs shortest paths (Floyd-Warshall, full run); afterwards the
  // matrix is canonical and emptiness is decided by the diagonal
  void canonicalize();

  // requires canonical input; true iff the zone has no valuations
  bool is_empty() const {
    assert(canonical_);
    return empty_;
  }

  std::string to_string() const;

  friend bool operator==(const Dbm& a, const Dbm& b) {
    return a.dim_ == b.dim_ && a.m_ == b.m_;
  }

  // byte key identifying the matrix contents, for hashing and dedup
  std::string key() const;

 private:
  friend Dbm reset(const Dbm& z, const std::vector<int>& zeroed);
  friend Dbm elapse(const Dbm& z);

  int dim_;
  bool canonical_;
  bool empty_;
  std::vector<Weight> m_;
};

// canonical z in, canonical out; may be empty
Dbm intersect_guard(const Dbm& z, const ClockGuard& g);

// canonical nonempty z in; sets every clock in `zeroed` to 0; stays canonical
Dbm reset(const Dbm& z, const std::vector<int>& zeroed);

// canonical nonempty z in; removes all upper bounds (time successors);
// stays canonical
Dbm elapse(const Dbm& z);

// delay, then guard, then reset; canonical nonempty z in, canonical out
// (possibly empty when the guard is unsatisfiable after delay)
Dbm zone_successor(const Dbm& z, const ClockGuard& g,
                   const std::vector<int>& resets);

// entrywise minimum; represents the intersection, NOT canonical
Dbm min_graph(const Dbm& a, const Dbm& b);

// set inclusion a included in b; both canonical
bool dbm_included(const Dbm& a, const Dbm& b);

}  // namespace taz
