#include "taz/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "taz/approx.hpp"
#include "taz/check.hpp"
#include "taz/region.hpp"

namespace taz {

SearchOptions options_for(const std::string& algo) {
  SearchOptions o;
  if (algo == "closure-lu") {
    o.bound_mode = BoundMode::lu;
    o.inclusion = InclusionMode::closure;
    o.bounds = BoundsSource::onthefly;
  } else if (algo == "closure-m") {
    o.bound_mode = BoundMode::m;
    o.inclusion = InclusionMode::closure;
    o.bounds = BoundsSource::onthefly;
  } else if (algo == "extra-lu-static") {
    o.bound_mode = BoundMode::lu;
    o.inclusion = InclusionMode::convex;
    o.bounds = BoundsSource::fixed;
  } else if (algo == "extra-m-static") {
    o.bound_mode = BoundMode::m;
    o.inclusion = InclusionMode::convex;
    o.bounds = BoundsSource::fixed;
  } else {
    throw std::invalid_argument("unknown configuration '" + algo + "'");
  }
  return o;
}

namespace {

bool bound_vec_le(const BoundVec& a, const BoundVec& b) {
  for (int x = 1; x <= a.clocks(); ++x) {
    if (a.get(x) == BoundVec::kNone) continue;
    if (b.get(x) == BoundVec::kNone || a.get(x) > b.get(x)) return false;
  }
  return true;
}

bool bounds_le(const LuBounds& a, const LuBounds& b) {
  return bound_vec_le(a.lower, b.lower) && bound_vec_le(a.upper, b.upper);
}

struct Node {
  explicit Node(Dbm z) : zone(std::move(z)) {}

  DiscreteState state;
  Dbm zone;            // exact (closure modes) or extrapolated (convex modes)
  bool empty = false;
  ClockGuard in_guard;  // product guard of the edge from the parent
  std::vector<int> in_resets;
  std::string in_label;
  int parent = -1;
  std::vector<int> children;
  LuBounds bounds;
  bool expanded = false;      // children have been created
  bool tentative = false;     // covered by the subsumer, not expanded
  int subsumer = -1;
  std::vector<int> dependents;  // nodes tentative with respect to this one
};

class Engine {
 public:
  Engine(const Network& net, const SearchOptions& opts)
      : net_(net), opts_(opts), sb_(static_bounds(net)) {}

  RunReport run();

 private:
  bool onthefly() const { return opts_.bounds == BoundsSource::onthefly; }

  LuBounds fixed_lu(const DiscreteState& s) const {
    LuBounds b = sb_.for_state(s);
    if (opts_.bound_mode == BoundMode::m) {
      const BoundVec a = b.max_alpha();
      b.lower = a;
      b.upper = a;
    }
    return b;
  }

  LuBounds initial_bounds(const DiscreteState& s) const {
    return onthefly() ? LuBounds(net_.clock_count()) : fixed_lu(s);
  }

  // inclusion of z in what the candidate covers, without bookkeeping
  bool raw_test(const Dbm& z, const Node& cand) const {
    if (opts_.inclusion == InclusionMode::convex)
      return dbm_included(z, cand.zone);
    const BoundVec alpha = cand.bounds.max_alpha();
    if (opts_.bound_mode == BoundMode::lu) {
      const Dbm zp = extra_lu_plus(cand.zone, cand.bounds);
      return !not_included_closure_lu(z, zp, alpha);
    }
    return !not_included_closure(z, cand.zone, alpha);
  }

  bool test_and_check(const Dbm& z, const Node& cand) {
    ++stats_.subsumption_tests;
    const bool included = raw_test(z, cand);
    if (opts_.oracle_check) oracle_confirm(z, cand, included);
    return included;
  }

  // confirm one decision against plain region enumeration when small enough
  void oracle_confirm(const Dbm& z, const Node& cand, bool included) {
    if (opts_.inclusion != InclusionMode::closure) return;
    const BoundVec alpha = cand.bounds.max_alpha();
    bool in_scale = net_.clock_count() >= 1 && net_.clock_count() <= 4;
    for (int x = 1; in_scale && x <= alpha.clocks(); ++x)
      if (alpha.get(x) != BoundVec::kNone && alpha.get(x) > 6)
        in_scale = false;
    if (!in_scale) {
      ++stats_.oracle_skipped;
      return;
    }
    bool oracle;
    if (opts_.bound_mode == BoundMode::lu) {
      Dbm zp = extra_lu_plus(cand.zone, cand.bounds);
      zp.canonicalize();
      oracle = closure_inclusion(z, zp, alpha);
    } else {
      oracle = closure_inclusion(z, cand.zone, alpha);
    }
    check(oracle == included,
          "subsumption decision contradicts region enumeration");
    ++stats_.oracle_checked;
  }

  void index_node(int nid) {
    index_[state_key(store_[nid].state)].push_back(nid);
  }

  // recompute this node's bounds from its outgoing edges; on change, push
  // the new bounds to nodes tentative here, then upward
  void propagate(int nid) {
    assert(onthefly());
    Node& n = store_[nid];
    LuBounds nb(net_.clock_count());
    for (int cid : n.children)
      nb.join(edge_bounds(store_[cid].in_guard, store_[cid].in_resets,
                          store_[cid].bounds));
    if (nb == n.bounds) return;
    n.bounds = std::move(nb);
    for (size_t i = 0; i < n.dependents.size(); ++i) {
      const int dep = n.dependents[i];
      store_[dep].bounds = n.bounds;
      if (store_[dep].parent >= 0) propagate(store_[dep].parent);
    }
    if (n.parent >= 0) propagate(n.parent);
  }

  // returns the accepting node id, or -1
  int explore(int nid, std::vector<int>& dfs) {
    assert(!store_[nid].empty && !store_[nid].tentative);
    if (query_holds(net_, store_[nid].state)) return nid;

    const std::string key = state_key(store_[nid].state);
    const auto it = index_.find(key);
    if (it != index_.end()) {
      const std::vector<int>& cands = it->second;
      // newest first; only expanded nodes may cover others, so covering
      // chains can never pass through a tentative node
      for (auto rit = cands.rbegin(); rit != cands.rend(); ++rit) {
        const int cid = *rit;
        if (cid == nid || !store_[cid].expanded) continue;
        assert(!store_[cid].tentative);
        if (!test_and_check(store_[nid].zone, store_[cid])) continue;
        Node& t = store_[nid];
        t.tentative = true;
        t.subsumer = cid;
        store_[cid].dependents.push_back(nid);
        if (onthefly()) {
          t.bounds = store_[cid].bounds;
          if (t.parent >= 0) propagate(t.parent);
        }
        return -1;
      }
    }

    ++stats_.visited;
    {
      const std::string rk = key + '/' + store_[nid].zone.key();
      if (++revisit_[rk] > opts_.revisit_limit)
        throw std::runtime_error(
            "termination guard: state " +
            state_name(net_, store_[nid].state) + " expanded more than " +
            std::to_string(opts_.revisit_limit) +
            " times with the same zone; visited=" +
            std::to_string(stats_.visited) +
            " reopened=" + std::to_string(stats_.reopened));
    }
    store_[nid].expanded = true;
    std::vector<Move> moves =
        product_successors(store_[nid].state, store_[nid].zone, net_);
    std::vector<int> created;
    for (Move& mv : moves) {
      Dbm z = std::move(mv.zone);
      const bool empty = z.is_empty();
      if (!empty && opts_.inclusion == InclusionMode::convex) {
        z = extra_lu_plus(z, fixed_lu(mv.target));
        z.canonicalize();
      }
      Node c(std::move(z));
      c.empty = empty;
      c.state = std::move(mv.target);
      c.in_guard = std::move(mv.clock_guard);
      c.in_resets = std::move(mv.resets);
      c.in_label = std::move(mv.label);
      c.parent = nid;
      c.bounds = initial_bounds(c.state);
      const int cid = int(store_.size());
      store_.push_back(std::move(c));
      if (!store_[cid].empty) index_node(cid);
      store_[nid].children.push_back(cid);
      created.push_back(cid);
      ++stats_.stored;
    }
    if (onthefly()) propagate(nid);
    for (auto rit = created.rbegin(); rit != created.rend(); ++rit)
      if (!store_[*rit].empty) dfs.push_back(*rit);
    return -1;
  }

  // undo tentative marks whose inclusion no longer holds under the current
  // bounds; repeated until a full pass changes nothing
  void resolve(std::vector<int>& main_stack) {
    if (!onthefly()) return;  // fixed bounds never break an inclusion
    for (bool any = true; any;) {
      any = false;
      std::vector<int> snapshot;
      for (size_t i = 0; i < store_.size(); ++i)
        if (store_[i].tentative) snapshot.push_back(int(i));
      for (int tid : snapshot) {
        if (!store_[tid].tentative) continue;
        if (test_and_check(store_[tid].zone, store_[store_[tid].subsumer]))
          continue;
        Node& t = store_[tid];
        auto& deps = store_[t.subsumer].dependents;
        deps.erase(std::remove(deps.begin(), deps.end(), tid), deps.end());
        t.tentative = false;
        t.subsumer = -1;
        t.bounds = LuBounds(net_.clock_count());
        ++stats_.reopened;
        if (t.parent >= 0) propagate(t.parent);
        main_stack.push_back(tid);
        any = true;
      }
    }
  }

  std::vector<std::string> climb(int nid) const {
    std::vector<std::string> out;
    for (int cur = nid; store_[cur].parent >= 0; cur = store_[cur].parent)
      out.push_back(store_[cur].in_label);
    std::reverse(out.begin(), out.end());
    return out;
  }

  // quiescence invariants of an unreachable verdict
  void audit_quiescence() const {
    const int k = net_.clock_count();
    for (size_t i = 0; i < store_.size(); ++i) {
      const Node& n = store_[i];
      if (!n.empty)
        check(n.expanded || n.tentative,
              "quiescence: a nonempty node was never explored");
      check(!(n.expanded && n.tentative),
            "quiescence: a node is both expanded and tentative");
      if (n.expanded && onthefly()) {
        LuBounds nb(k);
        for (int cid : n.children)
          nb.join(edge_bounds(store_[cid].in_guard, store_[cid].in_resets,
                              store_[cid].bounds));
        check(nb == n.bounds,
              "quiescence: bounds of an expanded node are not the join of "
              "its outgoing edges");
      }
      if (n.tentative) {
        check(n.subsumer >= 0 && n.subsumer < int(store_.size()),
              "quiescence: dangling subsumer");
        const Node& s = store_[n.subsumer];
        check(s.expanded && !s.tentative,
              "quiescence: subsumer is not an expanded nontentative node");
        check(state_key(s.state) == state_key(n.state),
              "quiescence: subsumer has a different discrete state");
        if (onthefly())
          check(n.bounds == s.bounds,
                "quiescence: tentative bounds differ from the subsumer's");
        check(raw_test(n.zone, s),
              "quiescence: a tentative node is no longer covered");
      }
      if (onthefly())
        check(bounds_le(n.bounds, sb_.for_state(n.state)),
              "quiescence: on-the-fly bounds exceed the static bounds");
      for (int dep : n.dependents)
        check(store_[dep].tentative && store_[dep].subsumer == int(i),
              "quiescence: dependents list out of sync");
    }
  }

  const Network& net_;
  const SearchOptions opts_;
  const StaticBounds sb_;
  std::vector<Node> store_;
  std::unordered_map<std::string, std::vector<int>> index_;
  std::unordered_map<std::string, uint64_t> revisit_;
  SearchStats stats_;
};

RunReport Engine::run() {
  const auto t0 = std::chrono::steady_clock::now();
  const int k = net_.clock_count();

  {
    Dbm z0 = Dbm::zero(k);
    if (opts_.inclusion == InclusionMode::convex) {
      z0 = extra_lu_plus(z0, fixed_lu(initial_state(net_)));
      z0.canonicalize();
    }
    Node root(std::move(z0));
    root.state = initial_state(net_);
    root.bounds = initial_bounds(root.state);
    store_.push_back(std::move(root));
    index_node(0);
    stats_.stored = 1;
  }

  std::vector<int> main_stack{0};
  int accept = -1;
  while (!main_stack.empty() && accept < 0) {
    const int start = main_stack.back();
    main_stack.pop_back();
    std::vector<int> dfs{start};
    while (!dfs.empty()) {
      const int nid = dfs.back();
      dfs.pop_back();
      accept = explore(nid, dfs);
      if (accept >= 0) break;
    }
    if (accept < 0) resolve(main_stack);
  }

  RunReport rep;
  if (accept >= 0) {
    rep.reachable = true;
    rep.trace = climb(accept);
    replay_trace(net_, rep.trace);
  } else if (opts_.audit) {
    audit_quiescence();
  }
  stats_.ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  rep.stats = stats_;
  if (opts_.collect_nodes) {
    for (const Node& n : store_) {
      NodeReport nr;
      nr.state = state_name(net_, n.state);
      nr.zone = n.zone.to_string();
      nr.empty = n.empty;
      nr.tentative = n.tentative;
      nr.expanded = n.expanded;
      nr.bounds = n.bounds;
      rep.nodes.push_back(std::move(nr));
    }
  }
  return rep;
}

}  // namespace

RunReport run(const Network& net, const SearchOptions& opts) {
  if (!net.has_query)
    throw std::invalid_argument("the model has no reachability query");
  if (opts.inclusion == InclusionMode::convex &&
      opts.bounds == BoundsSource::onthefly)
    throw std::invalid_argument(
        "convex inclusion stores extrapolated zones and needs fixed bounds");
  Engine eng(net, opts);
  return eng.run();
}

void replay_trace(const Network& net, const std::vector<std::string>& trace) {
  struct Cfg {
    DiscreteState s;
    Dbm z;
  };
  std::vector<Cfg> frontier;
  frontier.push_back({initial_state(net), Dbm::zero(net.clock_count())});
  for (const std::string& label : trace) {
    std::vector<Cfg> next;
    std::unordered_set<std::string> seen;
    for (const Cfg& c : frontier)
      for (Move& mv : product_successors(c.s, c.z, net)) {
        if (mv.label != label || mv.zone.is_empty()) continue;
        const std::string key = state_key(mv.target) + '/' + mv.zone.key();
        if (seen.insert(key).second)
          next.push_back({std::move(mv.target), std::move(mv.zone)});
      }
    if (next.empty())
      throw std::logic_error("trace replay failed at '" + label + "'");
    frontier = std::move(next);
  }
  for (const Cfg& c : frontier)
    if (query_holds(net, c.s)) return;
  throw std::logic_error("trace replay does not end in the queried state");
}

}  // namespace taz
