#pragma once

#include <stdexcept>
#include <string>

namespace gbt {

enum class Errc {
  ground_mismatch,
  bad_ground_set,
  unknown_label,
  duplicate_label,
  missing_empty_set,
  union_escape,
  schema_violation,
  unknown_name,
  out_of_range,
  io_failure,
};

const char* errc_name(Errc code) noexcept;

// Input or usage error. Everything a caller can provoke with bad data ends up here.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Two algorithms that must agree on a verdict did not. Always an engine bug.
class DeciderDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gbt
