#include "pebbling/error.hpp"

#include <sstream>

namespace pebbling {

namespace {

std::string cap_message(std::uint64_t cap, std::uint64_t needed, int level,
                        int last_verified) {
  std::ostringstream os;
  os << "enumeration cap exceeded at level " << level << ": " << needed
     << " configurations > cap " << cap;
  if (last_verified >= 0) {
    os << " (last level with a verified unsolvable configuration: "
       << last_verified << ")";
  }
  return os.str();
}

std::string coverage_message(const std::vector<int>& uncovered) {
  std::ostringstream os;
  os << "strategy set leaves vertices uncovered:";
  for (int v : uncovered) os << ' ' << v;
  return os.str();
}

std::string parse_message(const std::string& what, int line) {
  if (line <= 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

CapExceededError::CapExceededError(std::uint64_t cap, std::uint64_t needed,
                                   int level, int last_verified_level)
    : Error(cap_message(cap, needed, level, last_verified_level)),
      cap_(cap),
      needed_(needed),
      level_(level),
      last_verified_(last_verified_level) {}

CoverageError::CoverageError(std::vector<int> uncovered)
    : Error(coverage_message(uncovered)), uncovered_(std::move(uncovered)) {}

ParseError::ParseError(const std::string& what, int line)
    : Error(parse_message(what, line)), line_(line) {}

}  // namespace pebbling
