#include "equilog/report.hpp"

#include <algorithm>

namespace equilog {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

void Report::add(std::string name, bool passed, std::string witness) {
  checks.push_back(Check{std::move(name), passed, std::move(witness)});
}

Check& Report::open(std::string name) {
  checks.push_back(Check{std::move(name), true, {}});
  return checks.back();
}

}  // namespace equilog
