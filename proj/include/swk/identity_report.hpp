#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swk/errors.hpp"

namespace swk {

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct IdentityReport {
  std::string suite;
  std::vector<IdentityCheck> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void append(const IdentityReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const IdentityCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  // Throws IdentityFailure naming the first failing identity.
  void require() const {
    if (const auto* f = first_failure())
      throw IdentityFailure(suite + ": " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")"));
  }
};

}  // namespace swk
