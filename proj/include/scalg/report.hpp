#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scalg/tensor.hpp"

namespace scalg {

struct AxiomResult {
  std::string name;
  bool passed = true;
  /// Smallest failing basis tuple (lexicographic); empty when passed.
  std::vector<std::size_t> counterexample;
  std::string note;
};

/// Ordered list of named checks. A failed entry always carries its witness.
class AxiomReport {
 public:
  void add_pass(std::string name, std::string note = {});
  void add_fail(std::string name, std::vector<std::size_t> witness, std::string note = {});
  /// Compares two maps column by column; the first differing column is
  /// decoded into a basis tuple using the domain's leg dimensions.
  void check(std::string name, const LinearMap& lhs, const LinearMap& rhs, const std::vector<std::size_t>& domain_legs);
  void check(std::string name, bool ok, std::vector<std::size_t> witness = {}, std::string note = {});
  void append(const AxiomReport& other, const std::string& prefix = {});

  const std::vector<AxiomResult>& results() const { return results_; }
  bool all_passed() const;
  const AxiomResult* find(const std::string& name) const;
  bool passed(const std::string& name) const;

  /// One line per check: "PASS name" or "FAIL name at (i, j, ...)".
  std::string to_text() const;

 private:
  std::vector<AxiomResult> results_;
};

}  // namespace scalg
