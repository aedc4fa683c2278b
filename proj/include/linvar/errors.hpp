#pragma once

#include <stdexcept>
#include <string>

namespace linvar {

/// A checked history references an object the environment does not map,
/// or the environment itself is inconsistent.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The history has more operations than the configured search cap allows.
/// Deliberately distinct from a verdict: the caller asked a question the
/// engine refuses to answer, not one it answered "no" to.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The engines disagreed in a way that is impossible if they are correct
/// (e.g. a broken inclusion chain). Signals a checker bug, never bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& msg)
      : std::logic_error(msg) {}
};

}  // namespace linvar
