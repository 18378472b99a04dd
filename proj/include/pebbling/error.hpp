#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pebbling {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input: bad endpoint, self-loop, or a non-tree where a
/// tree is required.
class GraphError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public GraphError {
 public:
  DisconnectedGraphError() : GraphError("graph is not connected") {}
};

/// Invalid vertex id or configuration shape.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Raised when a level of the exhaustive search would enumerate more
/// configurations than the configured cap.
class CapExceededError : public Error {
 public:
  CapExceededError(std::uint64_t cap, std::uint64_t needed, int level,
                   int last_verified_level);

  std::uint64_t cap() const { return cap_; }
  std::uint64_t needed() const { return needed_; }
  int level() const { return level_; }
  /// Highest level known to contain an unsolvable configuration, or -1.
  int last_verified_level() const { return last_verified_; }

 private:
  std::uint64_t cap_;
  std::uint64_t needed_;
  int level_;
  int last_verified_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class StrategyError : public Error {
 public:
  using Error::Error;
};

/// Some non-root vertex receives zero total weight from a strategy set.
class CoverageError : public Error {
 public:
  explicit CoverageError(std::vector<int> uncovered);

  const std::vector<int>& uncovered() const { return uncovered_; }

 private:
  std::vector<int> uncovered_;
};

/// Text or JSON input that does not follow its file format. `line` is
/// 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0);

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace pebbling
