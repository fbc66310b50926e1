#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace delcode {

enum class DecodeStatus {
  ok,
  no_placement,          // no candidate string satisfies the sketch data
  inconsistent_bundle,   // candidates exist but none matches every field
  regularity_violation,  // input fails a structural precondition
  bad_input,             // malformed arguments (lengths, residues out of range)
};

const char* to_string(DecodeStatus s);

template <typename T>
struct DecodeResult {
  DecodeStatus status = DecodeStatus::no_placement;
  std::optional<T> value;

  static DecodeResult success(T v) {
    return DecodeResult{DecodeStatus::ok, std::move(v)};
  }
  static DecodeResult failure(DecodeStatus s) { return DecodeResult{s, std::nullopt}; }

  bool ok() const { return status == DecodeStatus::ok; }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

// Thrown when a condition the algorithms guarantee is violated at runtime;
// reaching one of these means a bug, not a bad input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace delcode
