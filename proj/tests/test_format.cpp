#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "scalg/commands.hpp"

using namespace scalg;
using namespace fixtures;

namespace {

const std::string kF1 = R"(scalars rational
object hopf kc2
dim 2
unit 0 1
mul 0 0 0 1
mul 0 1 1 1
mul 1 0 1 1
mul 1 1 0 1
comul 0 0 0 1
comul 1 1 1 1
counit 0 1
counit 1 1
antipode 0 0 1
antipode 1 1 1
end
)";

std::string data(const std::string& name) { return std::string(SCALG_DATA_DIR) + "/" + name; }

std::string parse_error(const std::string& text) {
  try {
    parse_scalg(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Parse, F1Document) {
  auto doc = parse_scalg(kF1);
  ASSERT_EQ(doc.objects().size(), 1u);
  auto h = doc.hopf("kc2");
  EXPECT_EQ(h.dim, 2u);
  EXPECT_EQ(h.mul, kc2().mul);
  EXPECT_EQ(h.antipode, kc2().antipode);
}

TEST(Parse, NonPrimeModulus) { EXPECT_NE(parse_error("scalars gf 4\n").find("modulus not prime"), std::string::npos); }

TEST(Parse, DuplicatesAreSummed) {
  auto doc = parse_scalg("scalars rational\nobject algebra a\ndim 1\nunit 0 1\nmul 0 0 0 1/2\nmul 0 0 0 1/2\nend\n");
  EXPECT_TRUE(doc.algebra("a").mul.get(0, 0, 0).is_one());
}

TEST(Parse, CommentsAndCancellation) {
  auto doc = parse_scalg("# header\nscalars gf 7 # seven\nobject algebra a\ndim 1\nunit 0 1\nmul 0 0 0 3\nmul 0 0 0 -2 # sum 1\nend\n");
  EXPECT_TRUE(doc.algebra("a").mul.get(0, 0, 0).is_one());
  EXPECT_EQ(doc.field(), GF7());
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error("scalars rational\nobject algebra a\ndim 1\nmul 0 0 3 1\nend\n").rfind("line 4:", 0), 0u);
  EXPECT_EQ(parse_error("scalars complex\n").rfind("line 1:", 0), 0u);
  EXPECT_EQ(parse_error("scalars rational\nobject algebra a\ndim 1\nfrobnicate 1\nend\n").rfind("line 4:", 0), 0u);
  EXPECT_EQ(parse_error("scalars rational\nobject action x hopf h algebra a\nend\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(parse_error("scalars rational\nobject algebra a\ndim 1\nmul 0 0 0 1/0\nend\n").rfind("line 4:", 0), 0u);
  EXPECT_FALSE(parse_error("scalars rational\nobject algebra a\ndim 1\n").empty());
}

TEST(Parse, OmittedAntipodeIsSolved) {
  std::string text = kF1;
  text.erase(text.find("antipode 0 0 1"), std::string("antipode 0 0 1\nantipode 1 1 1\n").size());
  EXPECT_EQ(parse_scalg(text).hopf("kc2").antipode, DenseMatrix::identity(Q(), 2));
}

TEST(Serialize, RoundtripsConstructedObjects) {
  for (Field f : {Q(), GF7()}) {
    for (const auto& h : hopf_pool(f)) {
      auto text = serialize(h, "h");
      auto back = parse_scalg(text).hopf("h");
      EXPECT_EQ(back.mul, h.mul);
      EXPECT_EQ(back.comul, h.comul);
      EXPECT_EQ(back.antipode, h.antipode);
      EXPECT_EQ(serialize(back, "h"), text);
    }
    auto d = drinfeld_double(kc2(f)).hopf;
    auto back = parse_scalg(serialize(d, "d")).hopf("d");
    EXPECT_TRUE(verify_hopf(back).all_passed());
  }
}

TEST(Serialize, CentreReparsesAndVerifies) {
  auto z = full_centre(f4()).yd;
  auto text = serialize(z, "z", "kc2");
  auto back = parse_scalg(text).ydalgebra("z");
  EXPECT_EQ(back.mul, z.mul);
  EXPECT_EQ(back.module.action, z.module.action);
  EXPECT_EQ(back.module.coaction, z.module.coaction);
  EXPECT_TRUE(verify_yd_algebra(back).all_passed());
  EXPECT_TRUE(quantum_commutative_check(back).all_passed());
}

TEST(Serialize, DataFilesRoundtrip) {
  for (const auto& entry : std::filesystem::directory_iterator(SCALG_DATA_DIR)) {
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    auto doc = parse_scalg(ss.str());
    auto text = serialize(doc);
    EXPECT_EQ(parse_scalg(text), doc) << entry.path();
    EXPECT_EQ(serialize(parse_scalg(text)), text);
  }
}

TEST(Cli, VerifyF1) {
  auto r = run("verify", {data("f1.scalg")});
  EXPECT_EQ(r.exit_code, 0) << r.text;
}

TEST(Cli, CentreF4) {
  auto r = run("centre", {data("f4.scalg")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.text.find("dim Z(A) = 2\n"), std::string::npos);
  EXPECT_NE(r.text.find("quantum commutative: PASS\n"), std::string::npos);
  EXPECT_EQ(run("centre", {data("f4.scalg")}).text, r.text);
}

TEST(Cli, CrosscheckAndDouble) {
  for (const char* f : {"f1.scalg", "f3.scalg", "f4.scalg", "f5.scalg", "s3.scalg", "mat2_graded.scalg"}) {
    auto r = run("crosscheck", {data(f)});
    EXPECT_EQ(r.exit_code, 0) << f << "\n" << r.text;
    EXPECT_EQ(r.text.find("FAIL"), std::string::npos);
  }
  auto d = run("double", {data("f3.scalg")});
  EXPECT_EQ(d.exit_code, 0) << d.text;
  EXPECT_NE(d.text.find("dim D(H) = 16"), std::string::npos);
}

TEST(Cli, CentreOutWritesReparsableFile) {
  auto out = std::filesystem::temp_directory_path() / "scalg_centre_test.scalg";
  auto r = run("centre", {data("f5.scalg"), "--out", out.string()});
  EXPECT_EQ(r.exit_code, 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  auto doc = parse_scalg(ss.str());
  bool found = false;
  for (const auto& o : doc.objects())
    if (o.kind == "ydalgebra") {
      found = true;
      EXPECT_TRUE(verify_yd_algebra(doc.ydalgebra(o.name)).all_passed());
    }
  EXPECT_TRUE(found);
  std::filesystem::remove(out);
}

TEST(Cli, FailuresAndErrors) {
  auto tmp = std::filesystem::temp_directory_path() / "scalg_bad.scalg";
  std::string bad = kF1;
  bad.replace(bad.find("mul 1 1 0 1"), 11, "mul 1 1 1 1");
  std::ofstream(tmp) << bad;
  auto r = run("verify", {tmp.string()});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.text.find("FAIL"), std::string::npos);
  std::ofstream(tmp) << "scalars gf 4\n";
  EXPECT_EQ(run("verify", {tmp.string()}).exit_code, 2);
  EXPECT_EQ(run("verify", {"/nonexistent/file.scalg"}).exit_code, 2);
  EXPECT_EQ(run("frobnicate", {data("f1.scalg")}).exit_code, 2);
  std::filesystem::remove(tmp);
}
