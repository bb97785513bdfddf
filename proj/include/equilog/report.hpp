#pragma once

#include <deque>
#include <string>

namespace equilog {

/// One named law or axiom with its verdict. `witness` is filled on failure.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct Report {
  std::deque<Check> checks;

  bool passed() const;
  /// nullptr when no check of that name was recorded.
  const Check* find(const std::string& name) const;
  void add(std::string name, bool passed, std::string witness = {});
  /// Appends a passing check; callers flip it on the first counterexample.
  Check& open(std::string name);
};

}  // namespace equilog
