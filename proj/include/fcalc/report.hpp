#pragma once

#include <cstddef>
#include <string>

namespace fcalc {

/// Outcome of an exhaustive or randomized identity check.
struct VerifyReport {
  bool passed = true;
  std::size_t cases = 0;
  /// Description of the first counterexample; empty on pass.
  std::string failure;

  void fail(std::string what) {
    if (passed) failure = std::move(what);
    passed = false;
  }
};

}  // namespace fcalc
