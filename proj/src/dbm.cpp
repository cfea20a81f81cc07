#include "taz/dbm.hpp"

#include <cassert>
#include <sstream>

namespace taz {

std::string cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::lt: return "<";
    case CmpOp::le: return "<=";
    case CmpOp::eq: return "==";
    case CmpOp::ge: return ">=";
    case CmpOp::gt: return ">";
  }
  return "?";
}

Dbm::Dbm(int clocks)
    : dim_(clocks + 1), canonical_(true), empty_(false),
      m_(dim_ * dim_, Weight::inf()) {
  assert(clocks >= 0);
  for (int x = 0; x < dim_; ++x) m_[x * dim_ + x] = Weight::le(0);
  // clock nonnegativity: 0 - x <= 0
  for (int x = 1; x < dim_; ++x) m_[x * dim_ + 0] = Weight::le(0);
}

Dbm Dbm::zero(int clocks) {
  Dbm z(clocks);
  for (auto& w : z.m_) w = Weight::le(0);
  z.canonical_ = true;
  z.empty_ = false;
  return z;
}

void Dbm::canonicalize() {
  if (canonical_) return;
  for (int k = 0; k < dim_; ++k)
    for (int x = 0; x < dim_; ++x) {
      const Weight xk = m_[x * dim_ + k];
      if (xk.is_inf()) continue;
      for (int y = 0; y < dim_; ++y) {
        const Weight via = xk + m_[k * dim_ + y];
        if (via < m_[x * dim_ + y]) m_[x * dim_ + y] = via;
      }
    }
  empty_ = false;
  for (int x = 0; x < dim_; ++x)
    if (m_[x * dim_ + x] < Weight::le(0)) empty_ = true;
  canonical_ = true;
}

std::string Dbm::to_string() const {
  std::ostringstream out;
  for (int x = 0; x < dim_; ++x) {
    for (int y = 0; y < dim_; ++y) {
      if (y) out << ' ';
      out << at(x, y).to_string();
    }
    out << '\n';
  }
  return out.str();
}

std::string Dbm::key() const {
  std::string k;
  k.reserve(m_.size() * 9);
  for (const Weight& w : m_) {
    const int64_t v = w.value();
    for (int b = 0; b < 8; ++b) k.push_back(char((v >> (8 * b)) & 0xff));
    k.push_back(w.strict() ? 1 : 0);
  }
  return k;
}

Dbm intersect_guard(const Dbm& z, const ClockGuard& g) {
  assert(z.canonical());
  Dbm r = z;
  bool touched = false;
  auto tighten = [&](int x, int y, Weight w) {
    if (w < r.at(x, y)) {
      r.set(x, y, w);
      touched = true;
    }
  };
  for (const ClockConstraint& c : g) {
    assert(c.clock >= 1 && c.clock < z.dim());
    switch (c.op) {
      case CmpOp::lt: tighten(0, c.clock, Weight::lt(c.bound)); break;
      case CmpOp::le: tighten(0, c.clock, Weight::le(c.bound)); break;
      case CmpOp::ge: tighten(c.clock, 0, Weight::le(-c.bound)); break;
      case CmpOp::gt: tighten(c.clock, 0, Weight::lt(-c.bound)); break;
      case CmpOp::eq:
        tighten(0, c.clock, Weight::le(c.bound));
        tighten(c.clock, 0, Weight::le(-c.bound));
        break;
    }
  }
  if (touched) r.canonicalize();
  return r;
}

Dbm reset(const Dbm& z, const std::vector<int>& zeroed) {
  assert(z.canonical() && !z.is_empty());
  Dbm r = z;
  std::vector<char> in(z.dim(), 0);
  for (int x : zeroed) {
    assert(x >= 1 && x < z.dim());
    in[x] = 1;
  }
  // reads go to z (the pre-reset matrix), writes to r
  for (int x = 1; x < z.dim(); ++x) {
    if (!in[x]) continue;
    for (int y = 1; y < z.dim(); ++y) {
      if (y == x) continue;
      if (in[y]) {
        r.m_[x * r.dim_ + y] = Weight::le(0);
        r.m_[y * r.dim_ + x] = Weight::le(0);
      } else {
        // x now equals the reference clock
        r.m_[x * r.dim_ + y] = z.at(0, y);
        r.m_[y * r.dim_ + x] = z.at(y, 0);
      }
    }
    r.m_[x * r.dim_ + 0] = Weight::le(0);
    r.m_[0 * r.dim_ + x] = Weight::le(0);
  }
  // rewriting rows/columns of reset clocks with shortest paths through the
  // reference clock keeps the matrix canonical
  r.canonical_ = true;
  r.empty_ = false;
  return r;
}

Dbm elapse(const Dbm& z) {
  assert(z.canonical() && !z.is_empty());
  Dbm r = z;
  // dropping all upper bounds cannot create shorter paths: any path using a
  // (0, x) edge now has infinite weight
  for (int x = 1; x < z.dim(); ++x) r.m_[0 * r.dim_ + x] = Weight::inf();
  r.canonical_ = true;
  r.empty_ = false;
  return r;
}

Dbm zone_successor(const Dbm& z, const ClockGuard& g,
                   const std::vector<int>& resets) {
  Dbm s = intersect_guard(elapse(z), g);
  if (s.is_empty()) return s;
  return reset(s, resets);
}

Dbm min_graph(const Dbm& a, const Dbm& b) {
  assert(a.dim() == b.dim());
  Dbm r = a;
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < a.dim(); ++y)
      r.set(x, y, weight_min(a.at(x, y), b.at(x, y)));
  return r;
}

bool dbm_included(const Dbm& a, const Dbm& b) {
  assert(a.canonical() && b.canonical() && a.dim() == b.dim());
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < a.dim(); ++y)
      if (b.at(x, y) < a.at(x, y)) return false;
  return true;
}

}  // namespace taz
