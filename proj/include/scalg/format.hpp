#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "scalg/yd.hpp"

namespace scalg {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One `object ... end` block. Coefficient directives are accumulated per
/// index tuple; zero sums are dropped.
struct ScalgObject {
  std::string kind;
  std::string name;
  /// hopf / algebra / group references, in declaration order.
  std::vector<std::pair<std::string, std::string>> refs;
  std::size_t dim = 0;
  std::map<std::string, std::map<std::vector<std::size_t>, Scalar>> entries;
  std::vector<std::vector<std::size_t>> rows;
  std::map<std::size_t, std::size_t> degrees;

  std::string ref(const std::string& key) const;
  friend bool operator==(const ScalgObject& a, const ScalgObject& b);
};

class ScalgDocument {
 public:
  explicit ScalgDocument(Field f) : field_(f) {}

  Field field() const { return field_; }
  const std::vector<ScalgObject>& objects() const { return objects_; }
  const ScalgObject& get(const std::string& name) const;
  bool has(const std::string& name) const;
  /// Throws BuildError on a duplicate name or an unresolved reference.
  void add(ScalgObject obj);

  void add_hopf(const std::string& name, const HopfAlgebraData& h);
  void add_algebra(const std::string& name, const AlgebraData& a);
  void add_group(const std::string& name, const GroupData& g);
  void add_action(const std::string& name, const std::string& hopf, const std::string& alg,
                  const StructureTensor& action);
  void add_grading(const std::string& name, const std::string& group, const std::string& alg,
                   const std::vector<std::size_t>& degrees);
  void add_ydmodule(const std::string& name, const std::string& hopf, const YDModuleData& m);
  void add_ydalgebra(const std::string& name, const std::string& hopf, const YDAlgebraData& a);

  HopfAlgebraData hopf(const std::string& name) const;
  AlgebraData algebra(const std::string& name) const;
  GroupData group(const std::string& name) const;
  /// action and grading objects.
  ModuleAlgebraData module_algebra(const std::string& name) const;
  std::vector<std::size_t> grading(const std::string& name) const;
  YDModuleData ydmodule(const std::string& name) const;
  YDAlgebraData ydalgebra(const std::string& name) const;

  friend bool operator==(const ScalgDocument& a, const ScalgDocument& b);

 private:
  Field field_;
  std::vector<ScalgObject> objects_;
};

ScalgDocument parse_scalg(const std::string& text);
std::string serialize(const ScalgDocument& doc);

/// Single-object documents.
std::string serialize(const HopfAlgebraData& h, const std::string& name = "H");
std::string serialize(const YDAlgebraData& a, const std::string& name = "Z", const std::string& hopf_name = "H");

}  // namespace scalg
