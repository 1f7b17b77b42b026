#pragma once

#include <string>
#include <vector>

#include "cfrac/word.hpp"

namespace cfrac {

struct IdentityCheck {
  std::string name;
  bool passed;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const noexcept {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

// Evaluates the continuant identities on W (no head): both recursions,
// value and reversed value, concatenation at `split`, the determinant
// identities, reversal and scaling by y, and the one-letter extension
// [W, x] = [W] + y' in both directions. Checks that need |W| >= 2 or
// 0 < split < |W| are skipped when W is too short.
IdentityReport identity_suite(const Word& w, std::size_t split, const FieldElement& y);

}  // namespace cfrac
