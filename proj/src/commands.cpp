#include "scalg/commands.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "scalg/centre.hpp"
#include "scalg/double.hpp"
#include "scalg/format.hpp"
#include "scalg/grouplike.hpp"

namespace scalg {

namespace {

class Output {
 public:
  void line(const std::string& s) { os_ << s << "\n"; }
  void report(const AxiomReport& r, const std::string& prefix = {}) {
    AxiomReport named;
    named.append(r, prefix);
    os_ << named.to_text();
    failed_ = failed_ || !r.all_passed();
  }
  void verdict(const std::string& label, bool ok) {
    line(label + ": " + (ok ? "PASS" : "FAIL"));
    failed_ = failed_ || !ok;
  }
  void fail(const std::string& s) {
    line("FAIL " + s);
    failed_ = true;
  }
  CommandResult done() const { return {failed_ ? 1 : 0, os_.str()}; }

 private:
  std::ostringstream os_;
  bool failed_ = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BuildError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string element_text(const Vector& v, std::size_t hdim) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string term = "a" + std::to_string(i / hdim) + "#h" + std::to_string(i % hdim);
    std::string c = v[i].to_string();
    if (!s.empty()) s += " + ";
    s += v[i].is_one() ? term : c + "*" + term;
  }
  return s.empty() ? "0" : s;
}

struct Target {
  std::string name;
  std::string hopf_name;
  ModuleAlgebraData data;
};

std::vector<Target> module_algebras(const ScalgDocument& doc) {
  std::vector<Target> out;
  for (const auto& o : doc.objects()) {
    if (o.kind == "action") out.push_back({o.name, o.ref("hopf"), doc.module_algebra(o.name)});
  }
  for (const auto& o : doc.objects()) {
    if (o.kind == "grading") {
      // graded algebras live over k(G), which has no object of its own
      out.push_back({o.name, "k(" + o.ref("group") + ")", doc.module_algebra(o.name)});
    }
  }
  if (out.empty()) {
    for (const auto& o : doc.objects()) {
      if (o.kind == "hopf") {
        HopfAlgebraData h = doc.hopf(o.name);
        out.push_back({"k", o.name, trivial_module_algebra(h)});
        break;
      }
    }
  }
  return out;
}

std::optional<GroupData> matching_group(const ScalgDocument& doc, const HopfAlgebraData& h) {
  for (const auto& o : doc.objects()) {
    if (o.kind != "group") continue;
    GroupData g = doc.group(o.name);
    if (g.order != h.dim) continue;
    HopfAlgebraData k = group_hopf(h.field, g);
    if (k.mul == h.mul && k.comul == h.comul) return g;
  }
  return std::nullopt;
}

CommandResult cmd_verify(const ScalgDocument& doc) {
  Output out;
  out.line("field " + doc.field().describe());
  for (const auto& o : doc.objects()) {
    std::string p = o.kind + " " + o.name + ": ";
    if (o.kind == "hopf") {
      HopfAlgebraData h = doc.hopf(o.name);
      out.report(verify_hopf(h), p);
      if (verify_hopf(h).all_passed()) {
        out.report(verify_antipode_properties(h), p);
        out.report(check_lemma_aux(h), p);
      }
    } else if (o.kind == "algebra") {
      out.report(verify_algebra(doc.algebra(o.name)), p);
    } else if (o.kind == "group") {
      doc.group(o.name);
      out.line("PASS " + p + "group laws");
    } else if (o.kind == "action" || o.kind == "grading") {
      out.report(verify_module_algebra(doc.module_algebra(o.name)), p);
    } else if (o.kind == "ydmodule") {
      out.report(verify_yd(doc.ydmodule(o.name)), p);
    } else if (o.kind == "ydalgebra") {
      out.report(verify_yd_algebra(doc.ydalgebra(o.name)), p);
    }
  }
  return out.done();
}

CommandResult cmd_centre(const ScalgDocument& doc, const std::optional<std::string>& out_path) {
  auto targets = module_algebras(doc);
  if (targets.empty()) throw BuildError("document has no hopf, action or grading object");
  const Target& t = targets.front();
  Output out;
  FullCentreData z = full_centre(t.data);
  std::size_t hdim = t.data.hopf.dim;
  out.line("centre of " + t.name + " over " + t.hopf_name);
  out.line("field " + doc.field().describe());
  out.line("dim A#H = " + std::to_string(z.source.dim));
  out.line("dim Z(A) = " + std::to_string(z.subspace.dim()));
  for (std::size_t i = 0; i < z.subspace.dim(); ++i) {
    out.line("z" + std::to_string(i) + " = " + element_text(z.subspace.basis()[i], hdim));
  }
  for (std::size_t i = 0; i < z.subspace.dim(); ++i) {
    std::string img;
    const auto col = z.canonical_to_A.column(i);
    for (std::size_t a = 0; a < col.size(); ++a) {
      if (col[a].is_zero()) continue;
      if (!img.empty()) img += " + ";
      img += col[a].is_one() ? "a" + std::to_string(a) : col[a].to_string() + "*a" + std::to_string(a);
    }
    out.line("z" + std::to_string(i) + " -> " + (img.empty() ? "0" : img));
  }
  out.report(verify_yd_algebra(z.yd), "centre ");
  out.verdict("quantum commutative", quantum_commutative_check(z.yd).all_passed());
  out.verdict("canonical map to A", true);
  if (out_path) {
    std::string hopf_name = doc.has(t.hopf_name) ? t.hopf_name : "H";
    std::ofstream f(*out_path);
    if (!f) throw BuildError("cannot write " + *out_path);
    f << serialize(z.yd, "centre", hopf_name);
    out.line("wrote " + *out_path);
  }
  return out.done();
}

CommandResult cmd_double(const ScalgDocument& doc) {
  Output out;
  const ScalgObject* hobj = nullptr;
  for (const auto& o : doc.objects()) {
    if (o.kind == "hopf") {
      hobj = &o;
      break;
    }
  }
  if (!hobj) throw BuildError("document has no hopf object");
  HopfAlgebraData h = doc.hopf(hobj->name);
  std::optional<DoubleData> built;
  try {
    built = drinfeld_double(h);
  } catch (const BuildError& e) {
    out.fail(std::string("double construction [") + e.what() + "]");
    return out.done();
  }
  const DoubleData& d = *built;
  out.line("double of " + hobj->name);
  out.line("dim D(H) = " + std::to_string(d.hopf.dim));
  out.line("convention: " + describe(d.convention));
  out.report(verify_hopf(d.hopf), "D(H) ");
  out.report(verify_double(d), "D(H) ");
  out.report(yd_double_roundtrip(trivial_yd(h), d), "trivial: ");
  out.report(yd_double_roundtrip(adjoint_yd(h), d), "adjoint: ");
  out.report(double_tensor_check(adjoint_yd(h), adjoint_yd(h), d), "adjoint (x) adjoint: ");
  for (const auto& o : doc.objects()) {
    if ((o.kind == "ydmodule" || o.kind == "ydalgebra") && o.ref("hopf") == hobj->name) {
      YDModuleData m = doc.ydmodule(o.name);
      bool yd_ok = verify_yd(m).all_passed();
      AxiomReport r = yd_double_roundtrip(m, d);
      out.report(r, o.name + ": ");
      out.verdict(o.name + ": verdict agrees with verify_yd", yd_ok == r.all_passed());
    }
  }
  return out.done();
}

CommandResult cmd_crosscheck(const ScalgDocument& doc) {
  Output out;
  auto targets = module_algebras(doc);
  if (targets.empty()) throw BuildError("document has no hopf, action or grading object");
  for (const auto& t : targets) {
    const auto& m = t.data;
    std::string p = t.name + ": ";
    out.report(check_lemma_aux(m.hopf), t.hopf_name + ": ");
    out.report(z_of_k_comparison(m.hopf), t.hopf_name + ": Z(k) ");
    FullCentreData z = full_centre(m);
    out.report(verify_centre(z), p + "centre ");
    out.report(embed_and_compare(m), p);
    out.report(morita_check(m, 2), p + "morita ");
    out.report(adjunction_maps(z.yd.module, underlying_module(m)).report, p + "adjunction ");
    out.report(adjunction_maps(adjoint_yd(m.hopf), underlying_module(m)).report, p + "adjunction (adjoint) ");
    const auto& obj = doc.get(t.name == "k" ? t.hopf_name : t.name);
    if (obj.kind == "grading") {
      GroupData g = doc.group(obj.ref("group"));
      out.report(graded_full_centre(m, g, doc.grading(t.name)).report, p);
    } else if (auto g = matching_group(doc, m.hopf)) {
      out.report(g_full_centre(m, *g).report, p);
      out.report(check_zg_braiding(z.yd.module, z.yd.module, *g), p + "Z(G) ");
    }
  }
  return out.done();
}

}  // namespace

CommandResult run(const std::string& command, const std::vector<std::string>& args) {
  try {
    if (args.empty()) throw BuildError("missing input file");
    std::optional<std::string> out_path;
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "--out" && command == "centre" && i + 1 < args.size()) {
        out_path = args[++i];
      } else {
        throw BuildError("unexpected argument " + args[i]);
      }
    }
    ScalgDocument doc = parse_scalg(read_file(args[0]));
    if (command == "verify") return cmd_verify(doc);
    if (command == "centre") return cmd_centre(doc, out_path);
    if (command == "double") return cmd_double(doc);
    if (command == "crosscheck") return cmd_crosscheck(doc);
    throw BuildError("unknown command " + command);
  } catch (const InternalError& e) {
    return {1, std::string("FAIL internal consistency [") + e.what() + "]\n"};
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace scalg
