#include "dgmf/report.hpp"

namespace dgmf {

void Report::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

bool Report::expect_equal(std::string name, const PolyMatrix& lhs, const PolyMatrix& rhs) {
  std::string diff = first_difference(lhs, rhs);
  add(std::move(name), diff.empty(), diff);
  return diff.empty();
}

bool Report::expect_zero(std::string name, const PolyMatrix& m) {
  return expect_equal(std::move(name), m, PolyMatrix(m.ring(), m.rows(), m.cols()));
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.detail});
}

bool Report::all_passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

std::vector<Check> Report::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c);
  return out;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  return c && c->passed;
}

std::string Report::summary() const {
  std::string out;
  for (const auto& c : checks_) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name;
    if (!c.detail.empty()) out += "  " + c.detail;
    out += "\n";
  }
  return out;
}

}  // namespace dgmf
