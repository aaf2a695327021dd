#pragma once

#include <string>
#include <vector>

namespace stci {

struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Structured outcome of a symbolic or finite-field check.
struct VerificationReport {
  std::string subject;
  std::vector<CheckItem> items;
  std::vector<std::string> witnesses;  // surviving terms / counterexamples

  bool ok() const {
    for (const auto& it : items)
      if (!it.ok) return false;
    return true;
  }
};

}  // namespace stci
