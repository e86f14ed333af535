#pragma once

#include <stdexcept>
#include <string>

namespace gybe {

/// Thrown for all usage and data errors (bad input files, shape mismatches,
/// singular matrices, cap overflows). Mathematical "check failed" outcomes
/// are values, not exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& what) { throw Error(what); }

}  // namespace gybe
