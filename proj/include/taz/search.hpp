#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taz/bounds.hpp"
#include "taz/model.hpp"

namespace taz {

enum class BoundMode { m, lu };
enum class InclusionMode { closure, convex };
enum class BoundsSource { onthefly, fixed };

struct SearchOptions {
  BoundMode bound_mode = BoundMode::lu;
  InclusionMode inclusion = InclusionMode::closure;
  BoundsSource bounds = BoundsSource::onthefly;

  // confirm every subsumption decision by region enumeration where the
  // dimension and bounds are small enough for it
  bool oracle_check = false;
  // verify the quiescence invariants before reporting unreachable
  bool audit = true;
  // fill RunReport::nodes
  bool collect_nodes = false;
  // expansions of one (discrete state, zone) pair before giving up
  uint64_t revisit_limit = 1000;
};

// named configurations exposed by the command line:
//   closure-lu       closure inclusion over on-the-fly lower/upper bounds
//   closure-m        closure inclusion over on-the-fly maximal bounds
//   extra-lu-static  inclusion of zones extrapolated with static
//                    lower/upper bounds
//   extra-m-static   the same with a single maximal bound per clock
SearchOptions options_for(const std::string& algo);

struct SearchStats {
  uint64_t visited = 0;            // node expansions
  uint64_t stored = 0;             // nodes retained, tentative and empty
                                   // leaves included
  uint64_t subsumption_tests = 0;
  uint64_t reopened = 0;           // tentative marks undone by resolve
  double ms = 0;
  uint64_t oracle_checked = 0;     // subsumption decisions confirmed
  uint64_t oracle_skipped = 0;     // decisions beyond enumeration scale
};

struct NodeReport {
  std::string state;
  std::string zone;
  bool empty = false;
  bool tentative = false;
  bool expanded = false;
  LuBounds bounds;
};

struct RunReport {
  bool reachable = false;
  // transition labels from the initial state, replay-validated
  std::vector<std::string> trace;
  SearchStats stats;
  std::vector<NodeReport> nodes;  // only when collect_nodes
};

RunReport run(const Network& net, const SearchOptions& opts);

// replays a transition label sequence under exact zone semantics and checks
// that it ends in a state satisfying the query; throws std::logic_error
// when it does not
void replay_trace(const Network& net, const std::vector<std::string>& trace);

}  // namespace taz
