#pragma once

#include <stdexcept>
#include <string>

namespace chemid {

// Bad user input: malformed files, broken invariants in supplied data,
// invalid configuration. The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure: a stage produced output that violates its own
// postconditions. The CLI maps this to exit code 2.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invariant_error(msg);
}

}  // namespace detail
}  // namespace chemid
