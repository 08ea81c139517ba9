#include "scalg/report.hpp"

#include <sstream>

namespace scalg {

void AxiomReport::add_pass(std::string name, std::string note) {
  results_.push_back({std::move(name), true, {}, std::move(note)});
}

void AxiomReport::add_fail(std::string name, std::vector<std::size_t> witness, std::string note) {
  results_.push_back({std::move(name), false, std::move(witness), std::move(note)});
}

void AxiomReport::check(std::string name, const LinearMap& lhs, const LinearMap& rhs,
                        const std::vector<std::size_t>& domain_legs) {
  auto diff = first_difference(lhs, rhs);
  if (!diff) {
    add_pass(std::move(name));
  } else {
    add_fail(std::move(name), unflatten(*diff, domain_legs));
  }
}

void AxiomReport::check(std::string name, bool ok, std::vector<std::size_t> witness, std::string note) {
  if (ok) {
    add_pass(std::move(name), std::move(note));
  } else {
    add_fail(std::move(name), std::move(witness), std::move(note));
  }
}

void AxiomReport::append(const AxiomReport& other, const std::string& prefix) {
  for (auto r : other.results_) {
    r.name = prefix + r.name;
    results_.push_back(std::move(r));
  }
}

bool AxiomReport::all_passed() const {
  for (const auto& r : results_) {
    if (!r.passed) return false;
  }
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& r : results_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

bool AxiomReport::passed(const std::string& name) const {
  const auto* r = find(name);
  return r != nullptr && r->passed;
}

std::string AxiomReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results_) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed && !r.counterexample.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < r.counterexample.size(); ++i) os << (i ? ", " : "") << r.counterexample[i];
      os << ")";
    }
    if (!r.note.empty()) os << " [" << r.note << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace scalg
