#pragma once

#include <string>

namespace rtour {

/// Outcome of a validator: ok, or the first clause that failed.
struct Verdict {
  bool ok = true;
  std::string clause;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return ok; }
};

} // namespace rtour
