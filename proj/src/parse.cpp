#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "taz/model.hpp"

namespace taz {

// ── parsing ─────────────────────────────────────────────────────────────

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::vector<std::string> split_on(const std::string& s,
                                  const std::string& sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  for (;;) {
    const size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(trim(s.substr(pos)));
      return out;
    }
    out.push_back(trim(s.substr(pos, next - pos)));
    pos = next + sep.size();
  }
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

struct ModelParser {
  Network net;
  int cur = -1;       // index of the process being filled
  int line_no = 0;
  bool saw_system = false;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
  }

  int64_t number(const std::string& s) const {
    size_t used = 0;
    int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      fail("expected a number, got '" + s + "'");
    }
    if (used != s.size()) fail("expected a number, got '" + s + "'");
    return v;
  }

  std::string fresh_value_name(const std::string& s) const {
    if (!is_identifier(s)) fail("invalid identifier '" + s + "'");
    if (net.clock_index(s) >= 0 || net.int_index(s) >= 0 ||
        net.chan_index(s) >= 0)
      fail("name '" + s + "' is already in use");
    return s;
  }

  CmpOp find_op(const std::string& atom, size_t& pos, size_t& len) const {
    static const struct {
      const char* text;
      CmpOp op;
    } ops[] = {{"<=", CmpOp::le}, {">=", CmpOp::ge}, {"==", CmpOp::eq},
               {"<", CmpOp::lt},  {">", CmpOp::gt},  {"=", CmpOp::eq}};
    for (const auto& o : ops) {
      pos = atom.find(o.text);
      if (pos != std::string::npos) {
        len = std::string(o.text).size();
        return o.op;
      }
    }
    fail("expected a comparison in '" + atom + "'");
  }

  // one conjunct "name op const" into the right bucket of a guard
  void parse_guard_atom(const std::string& atom, Guard& g) const {
    size_t pos = 0, len = 0;
    const CmpOp op = find_op(atom, pos, len);
    const std::string lhs = trim(atom.substr(0, pos));
    const std::string rhs = trim(atom.substr(pos + len));
    if (!is_identifier(lhs)) {
      if (lhs.find('-') != std::string::npos ||
          lhs.find('+') != std::string::npos)
        fail("difference constraints between clocks are not supported: '" +
             atom + "'");
      fail("expected an identifier before the comparison in '" + atom + "'");
    }
    const int64_t bound = number(rhs);
    const int clk = net.clock_index(lhs);
    if (clk >= 0) {
      if (bound < 0) fail("negative clock bound in '" + atom + "'");
      g.clocks.push_back({clk, op, bound});
      return;
    }
    const int iv = net.int_index(lhs);
    if (iv >= 0) {
      g.ints.push_back({iv, op, bound});
      return;
    }
    fail("unknown clock or int '" + lhs + "'");
  }

  Guard parse_guard(const std::string& text) const {
    Guard g;
    for (const std::string& atom : split_on(text, "&&")) {
      if (atom.empty()) fail("empty conjunct in '" + text + "'");
      parse_guard_atom(atom, g);
    }
    return g;
  }

  ClockGuard parse_invariant(const std::string& text) const {
    const Guard g = parse_guard(text);
    if (!g.ints.empty()) fail("invariants cannot constrain ints");
    for (const ClockConstraint& c : g.clocks)
      if (c.op != CmpOp::lt && c.op != CmpOp::le)
        fail("invariants must be upper bounds on clocks");
    return g.clocks;
  }

  // "x := 0" resets; "v := c" and "v := v + c" / "v := v - c" int updates
  void parse_assignment(const std::string& text, Edge& e) const {
    const size_t pos = text.find(":=");
    if (pos == std::string::npos) fail("expected ':=' in '" + text + "'");
    const std::string lhs = trim(text.substr(0, pos));
    const std::string rhs = trim(text.substr(pos + 2));
    const int clk = net.clock_index(lhs);
    if (clk >= 0) {
      if (rhs != "0") fail("clocks can only be reset to 0");
      e.resets.push_back(clk);
      return;
    }
    const int iv = net.int_index(lhs);
    if (iv < 0) fail("unknown clock or int '" + lhs + "'");
    const std::vector<std::string> t = split_ws(rhs);
    if (t.size() == 1) {
      e.updates.push_back({iv, false, number(t[0])});
      return;
    }
    if (t.size() == 3 && t[0] == lhs && (t[1] == "+" || t[1] == "-")) {
      const int64_t c = number(t[2]);
      e.updates.push_back({iv, true, t[1] == "+" ? c : -c});
      return;
    }
    fail("expected '" + lhs + " := c' or '" + lhs + " := " + lhs +
         " + c' in '" + text + "'");
  }

  Process& current() {
    if (cur < 0) fail("this directive needs a process");
    return net.processes[cur];
  }

  void parse_location(const std::vector<std::string>& tok,
                      const std::string& line) {
    if (tok.size() < 2) fail("location needs a name");
    Process& p = current();
    if (!is_identifier(tok[1])) fail("invalid identifier '" + tok[1] + "'");
    if (p.location_index(tok[1]) >= 0)
      fail("duplicate location '" + tok[1] + "'");
    Location loc;
    loc.name = tok[1];
    for (size_t i = 2; i < tok.size(); ++i) {
      if (tok[i] == "initial") {
        loc.initial = true;
      } else if (tok[i] == "accepting") {
        loc.accepting = true;
      } else if (tok[i] == "invariant:") {
        loc.invariant = parse_invariant(line.substr(
            line.find("invariant:") + std::string("invariant:").size()));
        break;
      } else {
        fail("unexpected token '" + tok[i] + "' in location");
      }
    }
    p.locations.push_back(std::move(loc));
  }

  void parse_edge(const std::vector<std::string>& tok,
                  const std::string& line) {
    Process& p = current();
    if (tok.size() < 4 || tok[2] != "->")
      fail("expected 'edge <src> -> <dst> ...'");
    Edge e;
    e.src = p.location_index(tok[1]);
    e.dst = p.location_index(tok[3]);
    if (e.src < 0) fail("unknown location '" + tok[1] + "'");
    if (e.dst < 0) fail("unknown location '" + tok[3] + "'");

    // sections run from their marker to the next marker
    const char* markers[] = {"guard:", "sync:", "do:"};
    size_t starts[3], ends[3];
    for (int m = 0; m < 3; ++m) starts[m] = line.find(markers[m]);
    for (int m = 0; m < 3; ++m) {
      ends[m] = line.size();
      if (starts[m] == std::string::npos) continue;
      for (int o = 0; o < 3; ++o)
        if (o != m && starts[o] != std::string::npos && starts[o] > starts[m])
          ends[m] = std::min(ends[m], starts[o]);
    }
    auto section = [&](int m) {
      const size_t from = starts[m] + std::string(markers[m]).size();
      return trim(line.substr(from, ends[m] - from));
    };

    if (starts[0] != std::string::npos) e.guard = parse_guard(section(0));
    if (starts[1] != std::string::npos) {
      const std::string s = section(1);
      if (s.size() < 2 || (s.back() != '!' && s.back() != '?'))
        fail("expected '<chan>!' or '<chan>?' after sync:");
      e.chan = net.chan_index(s.substr(0, s.size() - 1));
      if (e.chan < 0) fail("unknown channel '" + s.substr(0, s.size() - 1) + "'");
      e.sync = s.back() == '!' ? SyncKind::send : SyncKind::receive;
    }
    if (starts[2] != std::string::npos)
      for (const std::string& a : split_on(section(2), ","))
        parse_assignment(a, e);
    p.edges.push_back(std::move(e));
  }

  void parse_query(const std::string& line) {
    if (net.has_query) fail("duplicate query");
    const size_t pos = line.find("reachable:");
    if (pos == std::string::npos) fail("expected 'query reachable: ...'");
    const std::string text =
        line.substr(pos + std::string("reachable:").size());
    for (const std::string& atom : split_on(text, "&&")) {
      if (atom.empty()) fail("empty conjunct in query");
      QueryAtom a;
      if (atom.find('<') == std::string::npos &&
          atom.find('>') == std::string::npos &&
          atom.find('=') == std::string::npos) {
        const size_t dot = atom.find('.');
        if (dot == std::string::npos)
          fail("expected '<process>.<location>' or a comparison, got '" +
               atom + "'");
        a.is_location = true;
        a.process = net.process_index(trim(atom.substr(0, dot)));
        if (a.process < 0) fail("unknown process in '" + atom + "'");
        a.location = net.processes[a.process].location_index(
            trim(atom.substr(dot + 1)));
        if (a.location < 0) fail("unknown location in '" + atom + "'");
      } else {
        Guard g;
        parse_guard_atom(atom, g);
        if (!g.clocks.empty())
          fail("queries cannot constrain clocks: '" + atom + "'");
        a.cmp = g.ints[0];
      }
      net.query.push_back(a);
    }
    net.has_query = true;
  }

  void parse_line(const std::string& raw) {
    std::string line = raw;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::vector<std::string> tok = split_ws(line);
    if (tok.empty()) return;
    const std::string& kw = tok[0];
    if (kw == "system") {
      if (saw_system) fail("duplicate system line");
      if (tok.size() != 2) fail("expected 'system <name>'");
      net.name = tok[1];
      saw_system = true;
    } else if (kw == "clock") {
      if (tok.size() != 2) fail("expected 'clock <name>'");
      net.clocks.push_back(fresh_value_name(tok[1]));
    } else if (kw == "int") {
      if (tok.size() != 5) fail("expected 'int <name> <lo> <hi> <init>'");
      IntVar v;
      v.name = fresh_value_name(tok[1]);
      v.lo = number(tok[2]);
      v.hi = number(tok[3]);
      v.init = number(tok[4]);
      if (v.lo > v.hi) fail("empty range for int " + v.name);
      if (v.init < v.lo || v.init > v.hi)
        fail("initial value of int " + v.name + " out of range");
      net.int_vars.push_back(std::move(v));
    } else if (kw == "chan") {
      if (tok.size() != 2 && !(tok.size() == 3 && tok[2] == "broadcast"))
        fail("expected 'chan <name> [broadcast]'");
      Channel c;
      c.name = fresh_value_name(tok[1]);
      c.broadcast = tok.size() == 3;
      net.channels.push_back(std::move(c));
    } else if (kw == "process") {
      if (tok.size() != 2) fail("expected 'process <name>'");
      if (!is_identifier(tok[1])) fail("invalid identifier '" + tok[1] + "'");
      if (net.process_index(tok[1]) >= 0)
        fail("duplicate process '" + tok[1] + "'");
      Process p;
      p.name = tok[1];
      net.processes.push_back(std::move(p));
      cur = int(net.processes.size()) - 1;
    } else if (kw == "location") {
      parse_location(tok, line);
    } else if (kw == "edge") {
      parse_edge(tok, line);
    } else if (kw == "query") {
      parse_query(line);
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }
};

}  // namespace

Network parse_model(const std::string& text) {
  ModelParser p;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++p.line_no;
    p.parse_line(line);
  }
  if (!p.saw_system) throw std::runtime_error("missing 'system' line");
  finalize_network(p.net);
  return std::move(p.net);
}

// ── printing ────────────────────────────────────────────────────────────

namespace {

std::string clock_atom_text(const Network& net, const ClockConstraint& c) {
  return net.clocks[c.clock - 1] + " " + cmp_op_text(c.op) + " " +
         std::to_string(c.bound);
}

std::string guard_text(const Network& net, const Guard& g) {
  std::string s;
  for (const ClockConstraint& c : g.clocks) {
    if (!s.empty()) s += " && ";
    s += clock_atom_text(net, c);
  }
  for (const IntConstraint& c : g.ints) {
    if (!s.empty()) s += " && ";
    s += net.int_vars[c.var].name + " " + cmp_op_text(c.op) + " " +
         std::to_string(c.value);
  }
  return s;
}

}  // namespace

std::string print_model(const Network& net) {
  std::ostringstream o;
  o << "system " << net.name << "\n";
  for (const std::string& c : net.clocks) o << "clock " << c << "\n";
  for (const IntVar& v : net.int_vars)
    o << "int " << v.name << ' ' << v.lo << ' ' << v.hi << ' ' << v.init
      << "\n";
  for (const Channel& c : net.channels)
    o << "chan " << c.name << (c.broadcast ? " broadcast" : "") << "\n";
  for (const Process& p : net.processes) {
    o << "process " << p.name << "\n";
    for (const Location& l : p.locations) {
      o << "location " << l.name;
      if (l.initial) o << " initial";
      if (l.accepting) o << " accepting";
      if (!l.invariant.empty()) {
        o << " invariant:";
        for (size_t i = 0; i < l.invariant.size(); ++i)
          o << (i ? " && " : " ") << clock_atom_text(net, l.invariant[i]);
      }
      o << "\n";
    }
    for (const Edge& e : p.edges) {
      o << "edge " << p.locations[e.src].name << " -> "
        << p.locations[e.dst].name;
      if (!e.guard.clocks.empty() || !e.guard.ints.empty())
        o << " guard: " << guard_text(net, e.guard);
      if (e.sync != SyncKind::none)
        o << " sync: " << net.channels[e.chan].name
          << (e.sync == SyncKind::send ? '!' : '?');
      if (!e.resets.empty() || !e.updates.empty()) {
        o << " do: ";
        bool first = true;
        for (int x : e.resets) {
          if (!first) o << ", ";
          o << net.clocks[x - 1] << " := 0";
          first = false;
        }
        for (const IntUpdate& u : e.updates) {
          if (!first) o << ", ";
          const std::string& n = net.int_vars[u.var].name;
          if (!u.relative)
            o << n << " := " << u.value;
          else if (u.value >= 0)
            o << n << " := " << n << " + " << u.value;
          else
            o << n << " := " << n << " - " << -u.value;
          first = false;
        }
      }
      o << "\n";
    }
  }
  if (net.has_query) {
    o << "query reachable:";
    for (size_t i = 0; i < net.query.size(); ++i) {
      const QueryAtom& a = net.query[i];
      o << (i ? " && " : " ");
      if (a.is_location)
        o << net.processes[a.process].name << '.'
          << net.processes[a.process].locations[a.location].name;
      else
        o << net.int_vars[a.cmp.var].name << ' ' << cmp_op_text(a.cmp.op)
          << ' ' << a.cmp.value;
    }
    o << "\n";
  }
  return o.str();
}

}  // namespace taz
