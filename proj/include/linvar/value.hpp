#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace linvar {

/// True for nonempty strings of non-whitespace characters that the trace
/// grammar can carry verbatim (no '#', which starts a comment).
bool is_symbol_token(std::string_view text);

/// True if the text parses as a decimal integer ("-?[0-9]+").
bool looks_like_integer(std::string_view text);

/// A payload value: either a 64-bit integer or a symbolic token.
/// Integers and tokens never compare equal, even when they print alike;
/// token() rejects integer-looking spellings so the distinction survives
/// a serialize/parse round trip.
class Value {
 public:
  static Value integer(std::int64_t v);
  static Value token(std::string name);

  bool is_integer() const { return is_integer_; }
  bool is_token() const { return !is_integer_; }
  std::int64_t as_integer() const;
  const std::string& as_token() const;

  std::string to_string() const;

  bool operator==(const Value&) const = default;
  // Integers sort before tokens; used only to make reports deterministic.
  bool operator<(const Value& rhs) const;

 private:
  bool is_integer_ = true;
  std::int64_t int_ = 0;
  std::string token_;
};

/// Identity of a process. Equality is exact token equality.
class ProcessId {
 public:
  ProcessId() = default;
  explicit ProcessId(std::string name);
  const std::string& name() const { return name_; }
  bool operator==(const ProcessId&) const = default;
  bool operator<(const ProcessId& rhs) const { return name_ < rhs.name_; }

 private:
  std::string name_;
};

/// Identity of a shared object. Equality is exact token equality.
class ObjectId {
 public:
  ObjectId() = default;
  explicit ObjectId(std::string name);
  const std::string& name() const { return name_; }
  bool operator==(const ObjectId&) const = default;
  bool operator<(const ObjectId& rhs) const { return name_ < rhs.name_; }

 private:
  std::string name_;
};

std::size_t hash_combine(std::size_t seed, std::size_t v);

}  // namespace linvar

template <>
struct std::hash<linvar::Value> {
  std::size_t operator()(const linvar::Value& v) const;
};

template <>
struct std::hash<linvar::ProcessId> {
  std::size_t operator()(const linvar::ProcessId& p) const {
    return std::hash<std::string>{}(p.name());
  }
};

template <>
struct std::hash<linvar::ObjectId> {
  std::size_t operator()(const linvar::ObjectId& o) const {
    return std::hash<std::string>{}(o.name());
  }
};
