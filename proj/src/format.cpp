#include "scalg/format.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace scalg {

namespace {

struct Directive {
  const char* name;
  std::size_t indices;
};

// Directives accepted per object kind, in serialization order.
const std::map<std::string, std::vector<Directive>>& directive_table() {
  static const std::map<std::string, std::vector<Directive>> table = {
      {"hopf", {{"unit", 1}, {"counit", 1}, {"mul", 3}, {"comul", 3}, {"antipode", 2}}},
      {"algebra", {{"unit", 1}, {"mul", 3}}},
      {"action", {{"act", 3}}},
      {"group", {}},
      {"grading", {}},
      {"ydmodule", {{"act", 3}, {"coact", 3}}},
      {"ydalgebra", {{"unit", 1}, {"mul", 3}, {"act", 3}, {"coact", 3}}},
  };
  return table;
}

const std::map<std::string, std::vector<std::string>>& reference_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"hopf", {}},         {"algebra", {}},           {"group", {}},
      {"action", {"hopf", "algebra"}}, {"grading", {"group", "algebra"}},
      {"ydmodule", {"hopf"}}, {"ydalgebra", {"hopf"}},
  };
  return table;
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::size_t parse_index(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, "expected a non-negative index, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError(line, "index too large: " + s);
  }
}

void put(std::map<std::vector<std::size_t>, Scalar>& m, const std::vector<std::size_t>& key, const Scalar& c) {
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
  } else {
    it->second += c;
  }
}

void drop_zeros(ScalgObject& obj) {
  for (auto& [name, m] : obj.entries) {
    for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
  }
  for (auto it = obj.entries.begin(); it != obj.entries.end();) {
    it = it->second.empty() ? obj.entries.erase(it) : std::next(it);
  }
}

Vector vector_of(const ScalgObject& o, const std::string& key, Field f, std::size_t n) {
  Vector v = zero_vector(f, n);
  auto it = o.entries.find(key);
  if (it != o.entries.end()) {
    for (const auto& [idx, c] : it->second) v[idx[0]] = c;
  }
  return v;
}

StructureTensor tensor_of(const ScalgObject& o, const std::string& key, Field f, std::size_t d1, std::size_t d2,
                          std::size_t d3) {
  StructureTensor t(f, d1, d2, d3);
  auto it = o.entries.find(key);
  if (it != o.entries.end()) {
    for (const auto& [idx, c] : it->second) t.set(idx[0], idx[1], idx[2], c);
  }
  return t;
}

void store_vector(ScalgObject& o, const std::string& key, const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) o.entries[key].emplace(std::vector<std::size_t>{i}, v[i]);
  }
}

void store_tensor(ScalgObject& o, const std::string& key, const StructureTensor& t) {
  for (const auto& [idx, c] : t.entries()) o.entries[key].emplace(std::vector<std::size_t>{idx[0], idx[1], idx[2]}, c);
}

}  // namespace

std::string ScalgObject::ref(const std::string& key) const {
  for (const auto& [k, v] : refs) {
    if (k == key) return v;
  }
  throw BuildError("object " + name + " has no " + key + " reference");
}

bool operator==(const ScalgObject& a, const ScalgObject& b) {
  return a.kind == b.kind && a.name == b.name && a.refs == b.refs && a.dim == b.dim && a.entries == b.entries &&
         a.rows == b.rows && a.degrees == b.degrees;
}

bool operator==(const ScalgDocument& a, const ScalgDocument& b) {
  return a.field_ == b.field_ && a.objects_ == b.objects_;
}

const ScalgObject& ScalgDocument::get(const std::string& name) const {
  for (const auto& o : objects_) {
    if (o.name == name) return o;
  }
  throw BuildError("unknown object " + name);
}

bool ScalgDocument::has(const std::string& name) const {
  return std::any_of(objects_.begin(), objects_.end(), [&](const ScalgObject& o) { return o.name == name; });
}

void ScalgDocument::add(ScalgObject obj) {
  if (has(obj.name)) throw BuildError("duplicate object name " + obj.name);
  for (const auto& [key, target] : obj.refs) {
    if (!has(target)) throw BuildError("object " + obj.name + " references unknown " + key + " " + target);
    if (get(target).kind != key) throw BuildError("object " + target + " is not a " + key);
  }
  drop_zeros(obj);
  objects_.push_back(std::move(obj));
}

void ScalgDocument::add_hopf(const std::string& name, const HopfAlgebraData& h) {
  ScalgObject o{"hopf", name, {}, h.dim, {}, {}, {}};
  store_vector(o, "unit", h.unit);
  store_vector(o, "counit", h.counit);
  store_tensor(o, "mul", h.mul);
  store_tensor(o, "comul", h.comul);
  for (std::size_t i = 0; i < h.dim; ++i) {
    for (std::size_t j = 0; j < h.dim; ++j) {
      if (!h.antipode(j, i).is_zero()) o.entries["antipode"].emplace(std::vector<std::size_t>{i, j}, h.antipode(j, i));
    }
  }
  add(std::move(o));
}

void ScalgDocument::add_algebra(const std::string& name, const AlgebraData& a) {
  ScalgObject o{"algebra", name, {}, a.dim, {}, {}, {}};
  store_vector(o, "unit", a.unit);
  store_tensor(o, "mul", a.mul);
  add(std::move(o));
}

void ScalgDocument::add_group(const std::string& name, const GroupData& g) {
  ScalgObject o{"group", name, {}, g.order, {}, g.table, {}};
  add(std::move(o));
}

void ScalgDocument::add_action(const std::string& name, const std::string& hopf, const std::string& alg,
                               const StructureTensor& action) {
  ScalgObject o{"action", name, {{"hopf", hopf}, {"algebra", alg}}, 0, {}, {}, {}};
  store_tensor(o, "act", action);
  add(std::move(o));
}

void ScalgDocument::add_grading(const std::string& name, const std::string& group, const std::string& alg,
                                const std::vector<std::size_t>& degrees) {
  ScalgObject o{"grading", name, {{"group", group}, {"algebra", alg}}, 0, {}, {}, {}};
  for (std::size_t i = 0; i < degrees.size(); ++i) o.degrees[i] = degrees[i];
  add(std::move(o));
}

void ScalgDocument::add_ydmodule(const std::string& name, const std::string& hopf, const YDModuleData& m) {
  ScalgObject o{"ydmodule", name, {{"hopf", hopf}}, m.dim, {}, {}, {}};
  store_tensor(o, "act", m.action);
  store_tensor(o, "coact", m.coaction);
  add(std::move(o));
}

void ScalgDocument::add_ydalgebra(const std::string& name, const std::string& hopf, const YDAlgebraData& a) {
  ScalgObject o{"ydalgebra", name, {{"hopf", hopf}}, a.module.dim, {}, {}, {}};
  store_vector(o, "unit", a.unit);
  store_tensor(o, "mul", a.mul);
  store_tensor(o, "act", a.module.action);
  store_tensor(o, "coact", a.module.coaction);
  add(std::move(o));
}

HopfAlgebraData ScalgDocument::hopf(const std::string& name) const {
  const auto& o = get(name);
  if (o.kind != "hopf") throw BuildError(name + " is not a hopf object");
  std::size_t n = o.dim;
  std::optional<DenseMatrix> s;
  auto it = o.entries.find("antipode");
  if (it != o.entries.end()) {
    s = DenseMatrix(field_, n, n);
    for (const auto& [idx, c] : it->second) (*s)(idx[1], idx[0]) = c;
  }
  return make_hopf(field_, n, tensor_of(o, "mul", field_, n, n, n), vector_of(o, "unit", field_, n),
                   tensor_of(o, "comul", field_, n, n, n), vector_of(o, "counit", field_, n), s);
}

AlgebraData ScalgDocument::algebra(const std::string& name) const {
  const auto& o = get(name);
  if (o.kind != "algebra") throw BuildError(name + " is not an algebra object");
  return {field_, o.dim, tensor_of(o, "mul", field_, o.dim, o.dim, o.dim), vector_of(o, "unit", field_, o.dim)};
}

GroupData ScalgDocument::group(const std::string& name) const {
  const auto& o = get(name);
  if (o.kind != "group") throw BuildError(name + " is not a group object");
  return make_group(o.rows);
}

std::vector<std::size_t> ScalgDocument::grading(const std::string& name) const {
  const auto& o = get(name);
  if (o.kind != "grading") throw BuildError(name + " is not a grading object");
  std::size_t m = get(o.ref("algebra")).dim;
  std::vector<std::size_t> deg(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto it = o.degrees.find(i);
    if (it == o.degrees.end()) throw BuildError("grading " + name + " has no degree for basis vector " + std::to_string(i));
    deg[i] = it->second;
  }
  return deg;
}

ModuleAlgebraData ScalgDocument::module_algebra(const std::string& name) const {
  const auto& o = get(name);
  if (o.kind == "grading") return graded_algebra(group(o.ref("group")), algebra(o.ref("algebra")), grading(name));
  if (o.kind != "action") throw BuildError(name + " is not an action or grading object");
  HopfAlgebraData h = hopf(o.ref("hopf"));
  AlgebraData a = algebra(o.ref("algebra"));
  return {h, a, tensor_of(o, "act", field_, h.dim, a.dim, a.dim)};
}

YDModuleData ScalgDocument::ydmodule(const std::string& name) const {
  const auto& o = get(name);
  if (o.kind != "ydmodule" && o.kind != "ydalgebra") throw BuildError(name + " is not a YD object");
  HopfAlgebraData h = hopf(o.ref("hopf"));
  return {h, o.dim, tensor_of(o, "act", field_, h.dim, o.dim, o.dim), tensor_of(o, "coact", field_, o.dim, h.dim, o.dim)};
}

YDAlgebraData ScalgDocument::ydalgebra(const std::string& name) const {
  const auto& o = get(name);
  if (o.kind != "ydalgebra") throw BuildError(name + " is not a ydalgebra object");
  return {ydmodule(name), tensor_of(o, "mul", field_, o.dim, o.dim, o.dim), vector_of(o, "unit", field_, o.dim)};
}

ScalgDocument parse_scalg(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  std::size_t lineno = 0;
  std::optional<ScalgDocument> doc;
  std::optional<ScalgObject> cur;
  std::size_t cur_line = 0;
  bool have_dim = false;

  auto limits_for = [&](const std::string& directive) -> std::vector<std::size_t> {
    const auto& o = *cur;
    std::size_t d = o.dim;
    if (o.kind == "hopf" || o.kind == "algebra") {
      if (directive == "antipode") return {d, d};
      if (directive == "unit" || directive == "counit") return {d};
      return {d, d, d};
    }
    if (o.kind == "action") {
      std::size_t h = doc->get(o.ref("hopf")).dim;
      std::size_t a = doc->get(o.ref("algebra")).dim;
      return {h, a, a};
    }
    std::size_t h = doc->get(o.ref("hopf")).dim;
    if (directive == "act") return {h, d, d};
    if (directive == "coact") return {d, h, d};
    if (directive == "unit") return {d};
    return {d, d, d};
  };

  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto w = split_words(raw);
    if (w.empty()) continue;
    try {
      if (!doc) {
        if (w[0] != "scalars") throw ParseError(lineno, "document must start with a scalars directive");
        if (w.size() == 2 && w[1] == "rational") {
          doc.emplace(Field::rational());
        } else if (w.size() == 3 && w[1] == "gf") {
          doc.emplace(Field::prime(parse_index(w[2], lineno)));
        } else {
          throw ParseError(lineno, "unknown field descriptor");
        }
        continue;
      }
      if (!cur) {
        if (w[0] != "object" || w.size() < 3) throw ParseError(lineno, "expected an object directive");
        const auto& refs = reference_table();
        auto kind = refs.find(w[1]);
        if (kind == refs.end()) throw ParseError(lineno, "unknown object kind '" + w[1] + "'");
        if (w.size() != 3 + 2 * kind->second.size()) throw ParseError(lineno, "wrong references for " + w[1]);
        cur = ScalgObject{};
        cur->kind = w[1];
        cur->name = w[2];
        for (std::size_t i = 0; i < kind->second.size(); ++i) {
          if (w[3 + 2 * i] != kind->second[i]) throw ParseError(lineno, "expected reference '" + kind->second[i] + "'");
          const std::string& target = w[4 + 2 * i];
          if (!doc->has(target)) throw ParseError(lineno, "unknown object " + target);
          if (doc->get(target).kind != kind->second[i]) throw ParseError(lineno, target + " is not a " + kind->second[i]);
          cur->refs.emplace_back(kind->second[i], target);
        }
        if (doc->has(cur->name)) throw ParseError(lineno, "duplicate object name " + cur->name);
        cur_line = lineno;
        have_dim = cur->kind == "action" || cur->kind == "grading";
        continue;
      }
      const std::string& d = w[0];
      if (d == "end") {
        if (w.size() != 1) throw ParseError(lineno, "trailing tokens after end");
        if (!have_dim) throw ParseError(lineno, "object " + cur->name + " has no dim/order");
        if (cur->kind == "group" && cur->rows.size() != cur->dim) {
          throw ParseError(lineno, "group " + cur->name + " has missing Cayley rows");
        }
        doc->add(std::move(*cur));
        cur.reset();
        continue;
      }
      if (d == "dim" || d == "order") {
        bool is_group = cur->kind == "group";
        if ((d == "order") != is_group || cur->kind == "action" || cur->kind == "grading") {
          throw ParseError(lineno, "'" + d + "' not allowed in " + cur->kind);
        }
        if (have_dim) throw ParseError(lineno, "repeated " + d);
        if (w.size() != 2) throw ParseError(lineno, d + " takes one argument");
        cur->dim = parse_index(w[1], lineno);
        if (cur->dim == 0) throw ParseError(lineno, d + " must be positive");
        if (is_group) cur->rows.assign(cur->dim, {});
        have_dim = true;
        continue;
      }
      if (!have_dim) throw ParseError(lineno, "'" + d + "' before dim");
      if (d == "row") {
        if (cur->kind != "group") throw ParseError(lineno, "'row' only allowed in group objects");
        if (w.size() != 2 + cur->dim) throw ParseError(lineno, "row needs an index and " + std::to_string(cur->dim) + " entries");
        std::size_t i = parse_index(w[1], lineno);
        if (i >= cur->dim) throw ParseError(lineno, "index out of range");
        std::vector<std::size_t> row;
        for (std::size_t k = 2; k < w.size(); ++k) {
          row.push_back(parse_index(w[k], lineno));
          if (row.back() >= cur->dim) throw ParseError(lineno, "index out of range");
        }
        cur->rows[i] = std::move(row);
        continue;
      }
      if (d == "deg") {
        if (cur->kind != "grading") throw ParseError(lineno, "'deg' only allowed in grading objects");
        if (w.size() != 3) throw ParseError(lineno, "deg takes two arguments");
        std::size_t i = parse_index(w[1], lineno), g = parse_index(w[2], lineno);
        if (i >= doc->get(cur->ref("algebra")).dim || g >= doc->get(cur->ref("group")).dim) {
          throw ParseError(lineno, "index out of range");
        }
        cur->degrees[i] = g;
        continue;
      }
      const auto& allowed = directive_table().at(cur->kind);
      auto it = std::find_if(allowed.begin(), allowed.end(), [&](const Directive& x) { return d == x.name; });
      if (it == allowed.end()) throw ParseError(lineno, "unknown directive '" + d + "' in " + cur->kind);
      if (w.size() != it->indices + 2) throw ParseError(lineno, d + " takes " + std::to_string(it->indices + 1) + " arguments");
      auto lim = limits_for(d);
      std::vector<std::size_t> key;
      for (std::size_t k = 0; k < it->indices; ++k) {
        key.push_back(parse_index(w[1 + k], lineno));
        if (key.back() >= lim[k]) throw ParseError(lineno, "index out of range");
      }
      put(cur->entries[d], key, doc->field().parse(w.back()));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!doc) throw ParseError(lineno, "missing scalars directive");
  if (cur) throw ParseError(cur_line, "object " + cur->name + " is not terminated by end");
  return std::move(*doc);
}

std::string serialize(const ScalgDocument& doc) {
  std::ostringstream os;
  Field f = doc.field();
  os << (f.is_rational() ? "scalars rational" : "scalars gf " + std::to_string(f.modulus())) << "\n";
  for (const auto& o : doc.objects()) {
    os << "object " << o.kind << " " << o.name;
    for (const auto& [k, v] : o.refs) os << " " << k << " " << v;
    os << "\n";
    if (o.kind == "group") {
      os << "order " << o.dim << "\n";
      for (std::size_t i = 0; i < o.rows.size(); ++i) {
        os << "row " << i;
        for (auto x : o.rows[i]) os << " " << x;
        os << "\n";
      }
    } else if (o.kind != "action" && o.kind != "grading") {
      os << "dim " << o.dim << "\n";
    }
    for (const auto& dir : directive_table().at(o.kind)) {
      auto it = o.entries.find(dir.name);
      if (it == o.entries.end()) continue;
      for (const auto& [idx, c] : it->second) {
        os << dir.name;
        for (auto i : idx) os << " " << i;
        os << " " << c.to_string() << "\n";
      }
    }
    for (const auto& [i, g] : o.degrees) os << "deg " << i << " " << g << "\n";
    os << "end\n";
  }
  return os.str();
}

std::string serialize(const HopfAlgebraData& h, const std::string& name) {
  ScalgDocument doc(h.field);
  doc.add_hopf(name, h);
  return serialize(doc);
}

std::string serialize(const YDAlgebraData& a, const std::string& name, const std::string& hopf_name) {
  ScalgDocument doc(a.module.hopf.field);
  doc.add_hopf(hopf_name, a.module.hopf);
  doc.add_ydalgebra(name, hopf_name, a);
  return serialize(doc);
}

}  // namespace scalg
