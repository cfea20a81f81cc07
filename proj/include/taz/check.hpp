#pragma once

#include <stdexcept>
#include <string>

namespace taz {

// Always-on internal consistency check. Used where two independent routes to
// the same answer are compared (theory cross-checks); a failure means a bug
// or a broken derivation, so it must not be compiled out like assert().
inline void check(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error(what);
}

}  // namespace taz
