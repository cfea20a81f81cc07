#include "taz/generators.hpp"

#include <stdexcept>

namespace taz {

namespace {

ClockConstraint cc(int clock, CmpOp op, int64_t b) { return {clock, op, b}; }
IntConstraint ic(int var, CmpOp op, int64_t v) { return {var, op, v}; }

Location loc(const std::string& name, bool initial = false,
             bool accepting = false) {
  Location l;
  l.name = name;
  l.initial = initial;
  l.accepting = accepting;
  return l;
}

QueryAtom at_location(int process, int location) {
  QueryAtom a;
  a.is_location = true;
  a.process = process;
  a.location = location;
  return a;
}

Network fischer_net(int n, int64_t reentry, const std::string& name) {
  if (n < 2) throw std::invalid_argument("fischer needs at least 2 processes");
  Network net;
  net.name = name + std::to_string(n);
  for (int i = 1; i <= n; ++i) net.clocks.push_back("x" + std::to_string(i));
  net.int_vars.push_back({"id", 0, n, 0});
  const int id = 0;
  for (int i = 1; i <= n; ++i) {
    Process p;
    p.name = "P" + std::to_string(i);
    p.locations = {loc("idle", true), loc("req"), loc("wait"),
                   loc("cs", false, true)};
    const int x = i;  // dbm index of this process's clock
    Edge e;

    e = {};  // idle -> req: free to try while nobody holds the lock
    e.src = 0; e.dst = 1;
    e.guard.ints = {ic(id, CmpOp::eq, 0)};
    e.resets = {x};
    p.edges.push_back(e);

    e = {};  // req -> wait: write the lock within the write window
    e.src = 1; e.dst = 2;
    e.guard.clocks = {cc(x, CmpOp::le, 1)};
    e.updates = {{id, false, i}};
    e.resets = {x};
    p.edges.push_back(e);

    e = {};  // wait -> req: somebody else cleared the lock, try again
    e.src = 2; e.dst = 1;
    e.guard.ints = {ic(id, CmpOp::eq, 0)};
    e.resets = {x};
    p.edges.push_back(e);

    e = {};  // wait -> cs: enter after the reentry delay if still the owner
    e.src = 2; e.dst = 3;
    e.guard.clocks = {cc(x, CmpOp::ge, reentry)};
    e.guard.ints = {ic(id, CmpOp::eq, i)};
    p.edges.push_back(e);

    e = {};  // cs -> idle: release
    e.src = 3; e.dst = 0;
    e.updates = {{id, false, 0}};
    e.resets = {x};
    p.edges.push_back(e);

    net.processes.push_back(std::move(p));
  }
  net.query = {at_location(0, 3), at_location(1, 3)};
  net.has_query = true;
  finalize_network(net);
  return net;
}

}  // namespace

Network gen_fischer(int n) { return fischer_net(n, 2, "fischer"); }
Network gen_fischer_buggy(int n) {
  return fischer_net(n, 1, "fischer_buggy");
}

Network gen_csma(int n) {
  if (n < 2) throw std::invalid_argument("csma needs at least 2 stations");
  constexpr int64_t sigma = 2, lambda = 8;
  Network net;
  net.name = "csma" + std::to_string(n);
  net.clocks.push_back("y");  // bus clock, dbm index 1
  for (int i = 1; i <= n; ++i) net.clocks.push_back("x" + std::to_string(i));
  net.channels = {{"begin", false}, {"end", false}, {"cd", true}};
  const int begin = 0, end = 1, cd = 2;

  Process bus;
  bus.name = "Bus";
  bus.locations = {loc("idle", true), loc("active"), loc("collision"),
                   loc("buserr", false, true)};
  {
    Edge e;
    e = {};  // idle -> active: a station starts transmitting
    e.src = 0; e.dst = 1;
    e.chan = begin; e.sync = SyncKind::receive;
    e.resets = {1};
    bus.edges.push_back(e);

    e = {};  // active -> idle: the transmission ends
    e.src = 1; e.dst = 0;
    e.chan = end; e.sync = SyncKind::receive;
    bus.edges.push_back(e);

    e = {};  // active -> collision: second sender within the window
    e.src = 1; e.dst = 2;
    e.guard.clocks = {cc(1, CmpOp::lt, sigma)};
    e.chan = begin; e.sync = SyncKind::receive;
    e.resets = {1};
    bus.edges.push_back(e);

    e = {};  // collision -> idle: collision detected everywhere at once
    e.src = 2; e.dst = 0;
    e.guard.clocks = {cc(1, CmpOp::lt, sigma)};
    e.chan = cd; e.sync = SyncKind::send;
    e.resets = {1};
    bus.edges.push_back(e);

    e = {};  // idle -> buserr: an end with no transmission in progress
    e.src = 0; e.dst = 3;
    e.chan = end; e.sync = SyncKind::receive;
    bus.edges.push_back(e);
  }
  net.processes.push_back(std::move(bus));

  for (int i = 1; i <= n; ++i) {
    Process st;
    st.name = "P" + std::to_string(i);
    st.locations = {loc("wait", true), loc("trans"), loc("retry")};
    const int x = i + 1;
    Edge e;

    e = {};  // wait -> trans: grab the bus
    e.src = 0; e.dst = 1;
    e.chan = begin; e.sync = SyncKind::send;
    e.resets = {x};
    st.edges.push_back(e);

    e = {};  // trans -> wait: full message takes exactly lambda
    e.src = 1; e.dst = 0;
    e.guard.clocks = {cc(x, CmpOp::eq, lambda)};
    e.chan = end; e.sync = SyncKind::send;
    e.resets = {x};
    st.edges.push_back(e);

    e = {};  // trans -> retry: collision while transmitting
    e.src = 1; e.dst = 2;
    e.chan = cd; e.sync = SyncKind::receive;
    e.resets = {x};
    st.edges.push_back(e);

    e = {};  // wait -> wait: collisions of others pass by
    e.src = 0; e.dst = 0;
    e.chan = cd; e.sync = SyncKind::receive;
    st.edges.push_back(e);

    e = {};  // retry -> trans: try again within twice the window
    e.src = 2; e.dst = 1;
    e.guard.clocks = {cc(x, CmpOp::lt, 2 * sigma)};
    e.chan = begin; e.sync = SyncKind::send;
    e.resets = {x};
    st.edges.push_back(e);

    e = {};  // retry -> retry: another collision
    e.src = 2; e.dst = 2;
    e.chan = cd; e.sync = SyncKind::receive;
    e.resets = {x};
    st.edges.push_back(e);

    net.processes.push_back(std::move(st));
  }
  net.query = {at_location(0, 3)};
  net.has_query = true;
  finalize_network(net);
  return net;
}

Network gen_fddi(int n) {
  if (n < 2) throw std::invalid_argument("fddi needs at least 2 stations");
  constexpr int64_t td = 1, sa = 2, ad = 2;
  const int64_t trt = 4 * n;
  Network net;
  net.name = "fddi" + std::to_string(n);
  // per station: h (sync hold), r (since last release), a (async hold);
  // global: gl (token in flight), cyc (current rotation)
  for (int i = 1; i <= n; ++i) {
    net.clocks.push_back("h" + std::to_string(i));
    net.clocks.push_back("r" + std::to_string(i));
    net.clocks.push_back("a" + std::to_string(i));
  }
  net.clocks.push_back("gl");
  net.clocks.push_back("cyc");
  const int gl = 3 * n + 1, cyc = 3 * n + 2;
  const auto h = [](int i) { return 3 * (i - 1) + 1; };
  const auto r = [](int i) { return 3 * (i - 1) + 2; };
  const auto a = [](int i) { return 3 * (i - 1) + 3; };
  for (int i = 1; i <= n; ++i) {
    net.channels.push_back({"tok" + std::to_string(i), false});
    net.channels.push_back({"done" + std::to_string(i), false});
  }
  const auto tok = [](int i) { return 2 * (i - 1); };
  const auto done = [](int i) { return 2 * (i - 1) + 1; };

  Process ring;
  ring.name = "Ring";
  for (int i = 1; i <= n; ++i) {
    // the hop to station i takes exactly td: invariant plus equality guard
    Location at = loc("at" + std::to_string(i), i == 1);
    at.invariant = {cc(gl, CmpOp::le, td)};
    ring.locations.push_back(at);
    ring.locations.push_back(loc("hold" + std::to_string(i)));
  }
  ring.locations.push_back(loc("err", false, true));
  const auto at_l = [](int i) { return 2 * (i - 1); };
  const auto hold_l = [](int i) { return 2 * (i - 1) + 1; };
  for (int i = 1; i <= n; ++i) {
    Edge e;

    e = {};  // token reaches station i after the hop delay
    e.src = at_l(i); e.dst = hold_l(i);
    e.guard.clocks = {cc(gl, CmpOp::eq, td)};
    e.chan = tok(i); e.sync = SyncKind::send;
    e.resets = {gl};
    ring.edges.push_back(e);

    e = {};  // station done, token travels on; a full lap restarts cyc
    e.src = hold_l(i); e.dst = at_l(i == n ? 1 : i + 1);
    e.chan = done(i); e.sync = SyncKind::receive;
    e.resets = {gl};
    if (i == n) e.resets.push_back(cyc);
    ring.edges.push_back(e);
  }
  {
    Edge e;  // a rotation longer than 6n + 3 would break the ring's budget
    e.src = hold_l(1); e.dst = 2 * n;
    e.guard.clocks = {cc(cyc, CmpOp::gt, 6 * n + 3)};
    e.chan = done(1); e.sync = SyncKind::receive;
    ring.edges.push_back(e);
  }
  net.processes.push_back(std::move(ring));

  for (int i = 1; i <= n; ++i) {
    Process st;
    st.name = "P" + std::to_string(i);
    // every held location carries an invariant so the station cannot sit
    // on the token; otherwise cyc would grow past any rotation budget
    Location insync = loc("insync"), check = loc("check"),
             sendasync = loc("sendasync"), finish = loc("finish");
    insync.invariant = {cc(h(i), CmpOp::le, sa)};
    check.invariant = {cc(h(i), CmpOp::le, sa)};
    sendasync.invariant = {cc(a(i), CmpOp::le, ad)};
    finish.invariant = {cc(a(i), CmpOp::le, 0)};
    st.locations = {loc("idle", true), insync, check, sendasync, finish};
    Edge e;

    e = {};  // idle -> insync: token arrives
    e.src = 0; e.dst = 1;
    e.chan = tok(i); e.sync = SyncKind::receive;
    e.resets = {h(i)};
    st.edges.push_back(e);

    e = {};  // insync -> check: synchronous phase takes exactly sa
    e.src = 1; e.dst = 2;
    e.guard.clocks = {cc(h(i), CmpOp::eq, sa)};
    st.edges.push_back(e);

    e = {};  // check -> sendasync: early enough for asynchronous traffic
    e.src = 2; e.dst = 3;
    e.guard.clocks = {cc(r(i), CmpOp::lt, trt)};
    e.resets = {a(i)};
    st.edges.push_back(e);

    e = {};  // check -> finish: too late, skip the asynchronous phase
    e.src = 2; e.dst = 4;
    e.guard.clocks = {cc(r(i), CmpOp::ge, trt)};
    e.resets = {a(i)};  // rearm the finish invariant: release immediately
    st.edges.push_back(e);

    e = {};  // sendasync -> finish: asynchronous phase takes exactly ad
    e.src = 3; e.dst = 4;
    e.guard.clocks = {cc(a(i), CmpOp::eq, ad)};
    e.resets = {a(i)};
    st.edges.push_back(e);

    e = {};  // finish -> idle: release the token
    e.src = 4; e.dst = 0;
    e.chan = done(i); e.sync = SyncKind::send;
    e.resets = {r(i)};
    st.edges.push_back(e);

    net.processes.push_back(std::move(st));
  }
  net.query = {at_location(0, 2 * n)};
  net.has_query = true;
  finalize_network(net);
  return net;
}

// ── the three pump nets ─────────────────────────────────────────────────

namespace {

// shared skeleton: a pump self loop producing the point zones x = 0,
// y = 5k, none of which is included in another
Edge pump_edge() {
  Edge e;
  e.src = 0;
  e.dst = 0;
  e.guard.clocks = {cc(1, CmpOp::eq, 5)};
  e.resets = {1};
  return e;
}

}  // namespace

Network gen_pump_sync() {
  Network net;
  net.name = "pump-sync";
  net.clocks = {"x", "y"};
  net.channels = {{"a", false}};
  Process p;
  p.name = "P0";
  p.locations = {loc("q0", true), loc("q1", false, true), loc("q2")};
  p.edges.push_back(pump_edge());
  Edge e;

  e = {};  // the big constant hides behind a synchronization with no peer
  e.src = 0; e.dst = 1;
  e.guard.clocks = {cc(2, CmpOp::eq, 10000)};
  e.chan = 0; e.sync = SyncKind::send;
  p.edges.push_back(e);

  e = {};
  e.src = 0; e.dst = 2;
  e.guard.clocks = {cc(2, CmpOp::ge, 10)};
  p.edges.push_back(e);

  net.processes.push_back(std::move(p));
  Process q;
  q.name = "P1";
  q.locations = {loc("s0", true)};  // nobody ever receives on a
  net.processes.push_back(std::move(q));
  net.query = {at_location(0, 1)};
  net.has_query = true;
  finalize_network(net);
  return net;
}

Network gen_pump_empty() {
  Network net;
  net.name = "pump-empty";
  net.clocks = {"x", "y"};
  Process p;
  p.name = "P0";
  p.locations = {loc("q0", true), loc("q1"), loc("q2", false, true)};
  p.edges.push_back(pump_edge());
  Edge e;

  e = {};
  e.src = 0; e.dst = 1;
  e.guard.clocks = {cc(2, CmpOp::ge, 20)};
  p.edges.push_back(e);

  e = {};  // contradicts the way into q1, so successors stay empty
  e.src = 1; e.dst = 2;
  e.guard.clocks = {cc(2, CmpOp::le, 10)};
  p.edges.push_back(e);

  e = {};  // the big constant sits beyond the always-empty zone
  e.src = 2; e.dst = 2;
  e.guard.clocks = {cc(2, CmpOp::eq, 10000)};
  p.edges.push_back(e);

  net.processes.push_back(std::move(p));
  net.query = {at_location(0, 2)};
  net.has_query = true;
  finalize_network(net);
  return net;
}

Network gen_pump_int() {
  Network net;
  net.name = "pump-int";
  net.clocks = {"x", "y"};
  net.int_vars.push_back({"n", 0, 10, 0});
  Process p;
  p.name = "P0";
  p.locations = {loc("q0", true), loc("q1"), loc("q2", false, true)};
  p.edges.push_back(pump_edge());
  Edge e;

  e = {};
  e.src = 0; e.dst = 1;
  e.guard.clocks = {cc(2, CmpOp::ge, 10)};
  p.edges.push_back(e);

  e = {};  // n never moves, so the integer guard keeps q2 unreachable
  e.src = 0; e.dst = 2;
  e.guard.ints = {ic(0, CmpOp::eq, 10)};
  p.edges.push_back(e);

  e = {};  // the big constant sits behind the disabled transition
  e.src = 2; e.dst = 2;
  e.guard.clocks = {cc(2, CmpOp::eq, 10000)};
  p.edges.push_back(e);

  net.processes.push_back(std::move(p));
  net.query = {at_location(0, 2)};
  net.has_query = true;
  finalize_network(net);
  return net;
}

Network generate(const std::string& family, int n) {
  if (family == "fischer") return gen_fischer(n);
  if (family == "fischer-buggy") return gen_fischer_buggy(n);
  if (family == "csma") return gen_csma(n);
  if (family == "fddi") return gen_fddi(n);
  if (family == "pump-sync") return gen_pump_sync();
  if (family == "pump-empty") return gen_pump_empty();
  if (family == "pump-int") return gen_pump_int();
  throw std::invalid_argument("unknown model family '" + family + "'");
}

}  // namespace taz
