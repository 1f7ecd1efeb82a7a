#pragma once

#include <string>
#include <vector>

#include "dgmf/matrix.hpp"

namespace dgmf {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

// Ordered list of named exact checks.
class Report {
 public:
  void add(std::string name, bool passed, std::string detail = "");
  // Passes iff lhs == rhs; detail locates the first differing entry.
  bool expect_equal(std::string name, const PolyMatrix& lhs, const PolyMatrix& rhs);
  bool expect_zero(std::string name, const PolyMatrix& m);
  void append(const Report& other, const std::string& prefix = "");

  const std::vector<Check>& checks() const { return checks_; }
  bool all_passed() const;
  std::vector<Check> failures() const;
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;
  std::string summary() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace dgmf
