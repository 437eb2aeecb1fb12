#pragma once

#include <stdexcept>
#include <string>

namespace lowdim {

/// Rejected input: malformed text, out-of-range index, violated precondition.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void reject(const std::string& what) { throw input_error(what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) throw input_error(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw invariant_error(what);
}

}  // namespace detail
}  // namespace lowdim
