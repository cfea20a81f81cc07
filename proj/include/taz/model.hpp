#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taz/bounds.hpp"
#include "taz/dbm.hpp"

namespace taz {

struct IntConstraint {
  int var;
  CmpOp op;
  int64_t value;
  friend bool operator==(const IntConstraint&, const IntConstraint&) = default;
};

struct Guard {
  ClockGuard clocks;
  std::vector<IntConstraint> ints;
  friend bool operator==(const Guard&, const Guard&) = default;
};

// v := value, or v := v + value when relative (value may be negative)
struct IntUpdate {
  int var;
  bool relative;
  int64_t value;
  friend bool operator==(const IntUpdate&, const IntUpdate&) = default;
};

enum class SyncKind : uint8_t { none, send, receive };

struct Edge {
  int src = -1, dst = -1;
  Guard guard;              // as written in the model
  ClockGuard eff_clocks;    // guard plus source/target invariants folded in
  std::vector<int> resets;  // dbm indices, ascending
  std::vector<IntUpdate> updates;
  int chan = -1;
  SyncKind sync = SyncKind::none;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Location {
  std::string name;
  bool initial = false;
  bool accepting = false;
  ClockGuard invariant;  // upper-bound atoms only
  friend bool operator==(const Location&, const Location&) = default;
};

struct Process {
  std::string name;
  std::vector<Location> locations;
  int initial = -1;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out_edges;  // edge indices per location
  int location_index(const std::string& name) const;
  friend bool operator==(const Process&, const Process&) = default;
};

struct Channel {
  std::string name;
  bool broadcast = false;
  friend bool operator==(const Channel&, const Channel&) = default;
};

struct IntVar {
  std::string name;
  int64_t lo = 0, hi = 0, init = 0;
  friend bool operator==(const IntVar&, const IntVar&) = default;
};

// either "process at location" or an integer comparison
struct QueryAtom {
  bool is_location = false;
  int process = -1, location = -1;
  IntConstraint cmp{-1, CmpOp::eq, 0};
  friend bool operator==(const QueryAtom&, const QueryAtom&) = default;
};

struct Network {
  std::string name;
  std::vector<std::string> clocks;  // dbm index of clocks[i] is i + 1
  std::vector<IntVar> int_vars;
  std::vector<Channel> channels;
  std::vector<Process> processes;
  std::vector<QueryAtom> query;
  bool has_query = false;

  int clock_count() const { return int(clocks.size()); }
  int clock_index(const std::string& name) const;  // dbm index, -1 if absent
  int int_index(const std::string& name) const;
  int chan_index(const std::string& name) const;
  int process_index(const std::string& name) const;

  friend bool operator==(const Network&, const Network&) = default;
};

// validates cross references, folds invariants into every edge's effective
// guard, sorts resets, and builds the per-location edge lists; parse_model
// calls this, and generator-built networks must go through it too
void finalize_network(Network& net);

struct DiscreteState {
  std::vector<int> locs;
  std::vector<int64_t> ints;
  friend bool operator==(const DiscreteState&, const DiscreteState&) = default;
};

DiscreteState initial_state(const Network& net);
std::string state_key(const DiscreteState& s);
std::string state_name(const Network& net, const DiscreteState& s);
bool query_holds(const Network& net, const DiscreteState& s);

// one product transition instance from a given discrete state
struct Move {
  DiscreteState target;
  Dbm zone;                 // delay, guard, reset applied; may be empty
  ClockGuard clock_guard;   // conjoined effective guards of all participants
  std::vector<int> resets;  // union over participants, ascending
  std::string label;
};

// All product transitions enabled from (s, z), in deterministic order:
// initiating process, its edge index, then partner choices. Integer guards
// and update ranges filter instances before any zone is touched; clock
// guards never filter, so empty successor zones do appear.
std::vector<Move> product_successors(const DiscreteState& s, const Dbm& z,
                                     const Network& net);

// per-process, per-location clock bound constants from a backward fixpoint
// over that process's own edges (integer guards ignored)
struct StaticBounds {
  std::vector<std::vector<LuBounds>> per_location;
  LuBounds global;
  LuBounds for_state(const DiscreteState& s) const;
};

StaticBounds static_bounds(const Network& net);

// Text model format, line oriented. Throws std::runtime_error with a line
// number on syntax errors and on semantic errors (unknown names, difference
// constraints between clocks, invariants that are not upper bounds,
// integer initial values out of range).
Network parse_model(const std::string& text);

// canonical text form; parse_model(print_model(net)) reproduces net
std::string print_model(const Network& net);

}  // namespace taz
