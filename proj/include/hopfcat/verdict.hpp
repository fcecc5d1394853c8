#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hopfcat {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t items = 0;     // number of instances swept
  std::string witness;       // first offending input, empty when passing
  std::string details;       // lhs/rhs or other diagnostic text
};

struct Verdict {
  bool pass = true;
  int degree = 0;  // filtration level the checks ran at
  std::vector<CheckResult> checks;

  void add(CheckResult c) {
    pass = pass && c.pass;
    checks.push_back(std::move(c));
  }
  void merge(const Verdict& other, const std::string& prefix = "") {
    for (CheckResult c : other.checks) {
      if (!prefix.empty()) c.name = prefix + c.name;
      add(std::move(c));
    }
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + (c.witness.empty() ? "" : " at " + c.witness);
    return "";
  }
};

}  // namespace hopfcat
