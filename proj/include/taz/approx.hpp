#pragma once

#include "taz/bounds.hpp"
#include "taz/dbm.hpp"

namespace taz {

// Lower/upper-bound extrapolation of a canonical nonempty zone. The result
// deliberately stays non-canonical: the inclusion test below reads exactly
// these raw entries. Entries can exceed their canonical closure (and drop
// the implicit x >= 0 edges for clocks whose upper bound is -infinity);
// consumers treat the matrix as a constraint graph, not as shortest paths.
Dbm extra_lu_plus(const Dbm& z, const LuBounds& lu);

// Diagnostic witness of a failed closure inclusion: the clock pair and
// which of the three disjuncts fired.
struct ClosureWitness {
  bool not_included = false;
  int x = 0;
  int y = 0;      // only meaningful for condition 3
  int cond = 0;   // 1, 2 or 3
};

// Z not included in the closure of Z2 under per-clock bounds alpha; both
// canonical, decided entrywise in O(clocks^2) without touching regions.
bool not_included_closure(const Dbm& z, const Dbm& z2, const BoundVec& alpha);
ClosureWitness not_included_closure_witness(const Dbm& z, const Dbm& z2,
                                            const BoundVec& alpha);

// Same test with the second zone replaced by its raw lower/upper
// extrapolation (as produced by extra_lu_plus, not canonicalized).
bool not_included_closure_lu(const Dbm& z, const Dbm& z2plus,
                             const BoundVec& alpha);
ClosureWitness not_included_closure_lu_witness(const Dbm& z,
                                               const Dbm& z2plus,
                                               const BoundVec& alpha);

// convenience negations; an empty z is included in anything
bool included_closure(const Dbm& z, const Dbm& z2, const BoundVec& alpha);
bool included_closure_lu(const Dbm& z, const Dbm& z2plus,
                         const BoundVec& alpha);

}  // namespace taz
