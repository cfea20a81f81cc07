#include "taz/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace taz {

int Process::location_index(const std::string& n) const {
  for (size_t i = 0; i < locations.size(); ++i)
    if (locations[i].name == n) return int(i);
  return -1;
}

int Network::clock_index(const std::string& n) const {
  for (size_t i = 0; i < clocks.size(); ++i)
    if (clocks[i] == n) return int(i) + 1;
  return -1;
}

int Network::int_index(const std::string& n) const {
  for (size_t i = 0; i < int_vars.size(); ++i)
    if (int_vars[i].name == n) return int(i);
  return -1;
}

int Network::chan_index(const std::string& n) const {
  for (size_t i = 0; i < channels.size(); ++i)
    if (channels[i].name == n) return int(i);
  return -1;
}

int Network::process_index(const std::string& n) const {
  for (size_t i = 0; i < processes.size(); ++i)
    if (processes[i].name == n) return int(i);
  return -1;
}

// ── structural validation and invariant folding ─────────────────────────

namespace {

[[noreturn]] void bad_model(const std::string& what) {
  throw std::runtime_error("model: " + what);
}

void validate_clock_guard(const Network& net, const ClockGuard& g,
                          const std::string& where) {
  for (const ClockConstraint& c : g) {
    if (c.clock < 1 || c.clock > net.clock_count())
      bad_model("clock index out of range in " + where);
    if (c.bound < 0) bad_model("negative clock bound in " + where);
  }
}

}  // namespace

void finalize_network(Network& net) {
  if (net.processes.empty()) bad_model("no processes");
  for (const IntVar& v : net.int_vars) {
    if (v.lo > v.hi) bad_model("empty range for int " + v.name);
    if (v.init < v.lo || v.init > v.hi)
      bad_model("initial value of int " + v.name + " out of range");
  }
  for (Process& p : net.processes) {
    if (p.locations.empty()) bad_model("process " + p.name + " is empty");
    p.initial = -1;
    for (size_t l = 0; l < p.locations.size(); ++l) {
      const Location& loc = p.locations[l];
      for (const ClockConstraint& c : loc.invariant)
        if (c.op != CmpOp::lt && c.op != CmpOp::le)
          bad_model("invariant of " + p.name + "." + loc.name +
                    " is not an upper bound");
      validate_clock_guard(net, loc.invariant, p.name + "." + loc.name);
      if (loc.initial) {
        if (p.initial >= 0)
          bad_model("process " + p.name + " has two initial locations");
        p.initial = int(l);
      }
    }
    if (p.initial < 0)
      bad_model("process " + p.name + " has no initial location");

    p.out_edges.assign(p.locations.size(), {});
    for (size_t ei = 0; ei < p.edges.size(); ++ei) {
      Edge& e = p.edges[ei];
      if (e.src < 0 || e.src >= int(p.locations.size()) || e.dst < 0 ||
          e.dst >= int(p.locations.size()))
        bad_model("edge endpoint out of range in " + p.name);
      if ((e.chan >= 0) != (e.sync != SyncKind::none) ||
          e.chan >= int(net.channels.size()))
        bad_model("inconsistent synchronization in " + p.name);
      validate_clock_guard(net, e.guard.clocks, p.name);
      for (const IntConstraint& c : e.guard.ints)
        if (c.var < 0 || c.var >= int(net.int_vars.size()))
          bad_model("int index out of range in " + p.name);
      for (const IntUpdate& u : e.updates)
        if (u.var < 0 || u.var >= int(net.int_vars.size()))
          bad_model("int index out of range in " + p.name);
      std::sort(e.resets.begin(), e.resets.end());
      e.resets.erase(std::unique(e.resets.begin(), e.resets.end()),
                     e.resets.end());
      for (int x : e.resets)
        if (x < 1 || x > net.clock_count())
          bad_model("reset of unknown clock in " + p.name);

      // the guard is evaluated after delay and before the reset, so the
      // target invariant only constrains clocks the edge does not reset
      e.eff_clocks = e.guard.clocks;
      for (const ClockConstraint& c : p.locations[e.src].invariant)
        e.eff_clocks.push_back(c);
      for (const ClockConstraint& c : p.locations[e.dst].invariant)
        if (!std::binary_search(e.resets.begin(), e.resets.end(), c.clock))
          e.eff_clocks.push_back(c);

      p.out_edges[e.src].push_back(int(ei));
    }
  }
  for (const QueryAtom& a : net.query) {
    if (a.is_location) {
      if (a.process < 0 || a.process >= int(net.processes.size()) ||
          a.location < 0 ||
          a.location >= int(net.processes[a.process].locations.size()))
        bad_model("query references unknown location");
    } else if (a.cmp.var < 0 || a.cmp.var >= int(net.int_vars.size())) {
      bad_model("query references unknown int");
    }
  }
}

// ── discrete states ─────────────────────────────────────────────────────

DiscreteState initial_state(const Network& net) {
  DiscreteState s;
  for (const Process& p : net.processes) s.locs.push_back(p.initial);
  for (const IntVar& v : net.int_vars) s.ints.push_back(v.init);
  return s;
}

std::string state_key(const DiscreteState& s) {
  std::ostringstream out;
  for (int l : s.locs) out << l << ',';
  out << '|';
  for (int64_t v : s.ints) out << v << ',';
  return out.str();
}

std::string state_name(const Network& net, const DiscreteState& s) {
  std::ostringstream out;
  for (size_t p = 0; p < net.processes.size(); ++p) {
    if (p) out << ' ';
    out << net.processes[p].name << '.'
        << net.processes[p].locations[s.locs[p]].name;
  }
  for (size_t i = 0; i < net.int_vars.size(); ++i)
    out << ' ' << net.int_vars[i].name << '=' << s.ints[i];
  return out.str();
}

namespace {

bool int_cmp(int64_t v, CmpOp op, int64_t c) {
  switch (op) {
    case CmpOp::lt: return v < c;
    case CmpOp::le: return v <= c;
    case CmpOp::eq: return v == c;
    case CmpOp::ge: return v >= c;
    case CmpOp::gt: return v > c;
  }
  return false;
}

bool ints_pass(const std::vector<IntConstraint>& gs, const DiscreteState& s) {
  for (const IntConstraint& g : gs)
    if (!int_cmp(s.ints[g.var], g.op, g.value)) return false;
  return true;
}

}  // namespace

bool query_holds(const Network& net, const DiscreteState& s) {
  if (!net.has_query) return false;
  for (const QueryAtom& a : net.query) {
    if (a.is_location) {
      if (s.locs[a.process] != a.location) return false;
    } else if (!int_cmp(s.ints[a.cmp.var], a.cmp.op, a.cmp.value)) {
      return false;
    }
  }
  return true;
}

// ── product transitions ─────────────────────────────────────────────────

namespace {

struct Participant {
  int process;
  const Edge* edge;
};

std::string participant_label(const Network& net, const Participant& pt) {
  const Process& p = net.processes[pt.process];
  std::string s = p.name + "." + p.locations[pt.edge->src].name + "->" +
                  p.locations[pt.edge->dst].name;
  if (pt.edge->sync == SyncKind::send)
    s += "!" + net.channels[pt.edge->chan].name;
  else if (pt.edge->sync == SyncKind::receive)
    s += "?" + net.channels[pt.edge->chan].name;
  return s;
}

void emit_move(const Network& net, const DiscreteState& s, const Dbm& z,
               const std::vector<Participant>& parts,
               std::vector<Move>& out) {
  DiscreteState t = s;
  for (const Participant& pt : parts) {
    t.locs[pt.process] = pt.edge->dst;
    for (const IntUpdate& u : pt.edge->updates) {
      const int64_t nv = u.relative ? t.ints[u.var] + u.value : u.value;
      const IntVar& var = net.int_vars[u.var];
      if (nv < var.lo || nv > var.hi) return;  // instance disabled
      t.ints[u.var] = nv;
    }
  }
  ClockGuard guard;
  std::vector<int> resets;
  std::string label;
  for (const Participant& pt : parts) {
    guard.insert(guard.end(), pt.edge->eff_clocks.begin(),
                 pt.edge->eff_clocks.end());
    resets.insert(resets.end(), pt.edge->resets.begin(),
                  pt.edge->resets.end());
    if (!label.empty()) label += ' ';
    label += participant_label(net, pt);
  }
  std::sort(resets.begin(), resets.end());
  resets.erase(std::unique(resets.begin(), resets.end()), resets.end());
  Dbm zone = zone_successor(z, guard, resets);
  out.push_back(Move{std::move(t), std::move(zone), std::move(guard),
                     std::move(resets), std::move(label)});
}

}  // namespace

std::vector<Move> product_successors(const DiscreteState& s, const Dbm& z,
                                     const Network& net) {
  assert(z.canonical() && !z.is_empty());
  std::vector<Move> out;
  const int np = int(net.processes.size());
  for (int p = 0; p < np; ++p) {
    const Process& proc = net.processes[p];
    for (int ei : proc.out_edges[s.locs[p]]) {
      const Edge& e = proc.edges[ei];
      if (e.sync == SyncKind::receive) continue;
      if (!ints_pass(e.guard.ints, s)) continue;

      if (e.sync == SyncKind::none) {
        emit_move(net, s, z, {{p, &e}}, out);
        continue;
      }
      if (!net.channels[e.chan].broadcast) {
        // handshake: one partner, any process but the sender
        for (int q = 0; q < np; ++q) {
          if (q == p) continue;
          const Process& qp = net.processes[q];
          for (int fi : qp.out_edges[s.locs[q]]) {
            const Edge& f = qp.edges[fi];
            if (f.sync != SyncKind::receive || f.chan != e.chan) continue;
            if (!ints_pass(f.guard.ints, s)) continue;
            emit_move(net, s, z, {{p, &e}, {q, &f}}, out);
          }
        }
        continue;
      }
      // broadcast: every process with an int-enabled receive edge joins;
      // several enabled edges in one process fork into separate instances
      std::vector<std::vector<Participant>> choices;
      for (int q = 0; q < np; ++q) {
        if (q == p) continue;
        const Process& qp = net.processes[q];
        std::vector<Participant> mine;
        for (int fi : qp.out_edges[s.locs[q]]) {
          const Edge& f = qp.edges[fi];
          if (f.sync != SyncKind::receive || f.chan != e.chan) continue;
          if (!ints_pass(f.guard.ints, s)) continue;
          mine.push_back({q, &f});
        }
        if (!mine.empty()) choices.push_back(std::move(mine));
      }
      std::vector<size_t> pick(choices.size(), 0);
      for (;;) {
        std::vector<Participant> parts{{p, &e}};
        for (size_t i = 0; i < choices.size(); ++i)
          parts.push_back(choices[i][pick[i]]);
        emit_move(net, s, z, parts, out);
        if (choices.empty()) break;
        int i = int(choices.size()) - 1;
        while (i >= 0 && ++pick[i] == choices[i].size()) pick[i--] = 0;
        if (i < 0) break;
      }
    }
  }
  return out;
}

// ── static clock bounds ─────────────────────────────────────────────────

LuBounds StaticBounds::for_state(const DiscreteState& s) const {
  LuBounds b = per_location[0][s.locs[0]];
  for (size_t p = 1; p < per_location.size(); ++p)
    b.join(per_location[p][s.locs[p]]);
  return b;
}

StaticBounds static_bounds(const Network& net) {
  const int k = net.clock_count();
  StaticBounds sb;
  sb.global = LuBounds(k);
  for (const Process& p : net.processes) {
    std::vector<LuBounds> b(p.locations.size(), LuBounds(k));
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t l = 0; l < p.locations.size(); ++l)
        for (int ei : p.out_edges[l]) {
          const Edge& e = p.edges[ei];
          LuBounds j = b[l];
          j.join(edge_bounds(e.eff_clocks, e.resets, b[e.dst]));
          if (!(j == b[l])) {
            b[l] = std::move(j);
            changed = true;
          }
        }
    }
    for (const LuBounds& lb : b) sb.global.join(lb);
    sb.per_location.push_back(std::move(b));
  }
  return sb;
}

}  // namespace taz
