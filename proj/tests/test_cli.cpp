#include <cstring>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "document.hpp"
#include "jbdet/generators.hpp"
#include "jbdet/sampling.hpp"

using namespace jbdet;
namespace fs = std::filesystem;

namespace {

const cplx I{0.0, 1.0};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("jbdet-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const std::string p = (dir_ / name).string();
    io::write_text(p, text);
    return p;
  }
  std::string write(const std::string& name, const HermMatrix& x) { return write(name, io::encode(x).dump()); }

  fs::path dir_;
};

HermMatrix diag3(cplx a, cplx b, cplx c, int level = 3) {
  const std::array<cplx, 3> d{a, b, c};
  return HermMatrix::diagonal(d, level);
}

}  // namespace

TEST_F(CliTest, DtOfDiagonal) {
  const Outcome r = run({"dt", write("x.json", diag3(1, I, -1))});
  ASSERT_EQ(r.code, 0) << r.err;
  std::smatch m;
  ASSERT_TRUE(std::regex_search(r.out, m, std::regex(R"(dt = (\S+)\+\((\S+)\)i)"))) << r.out;
  EXPECT_EQ(std::stod(m[1].str()), 0.0);
  EXPECT_EQ(std::stod(m[2].str()), -1.0);
}

TEST_F(CliTest, CheckHat) {
  Rng rng(71);
  const Outcome r = run({"dt", "--check-hat", write("x.json", random_herm(rng, 3, 2))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("check-hat"), std::string::npos);
  EXPECT_NE(r.out.find(": ok"), std::string::npos) << r.out;
}

TEST_F(CliTest, MalformedInput) {
  EXPECT_EQ(run({"dt", write("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"dt", write("shape.json", R"({"schema_version":1,"kind":"c6_element","data":[]})")}).code, 2);
  EXPECT_EQ(run({"dt", (dir_ / "missing.json").string()}).code, 2);
}

TEST_F(CliTest, UnsupportedElement) {
  Rng rng(72);
  EXPECT_EQ(run({"dt", write("x.json", random_herm(rng, 3, 3))}).code, 4);
}

TEST_F(CliTest, VerifyUnknownSuite) { EXPECT_EQ(run({"verify", "nosuch"}).code, 2); }

TEST_F(CliTest, VerifySuite) {
  const std::string report = (dir_ / "report.json").string();
  const Outcome r = run({"--seed", "7", "--trials", "30", "--no-timestamp", "--out", report, "verify", "t-product"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("worst"), std::string::npos);
  EXPECT_TRUE(fs::exists(report));
}

TEST_F(CliTest, GenIsDeterministic) {
  const Outcome a = run({"--seed", "1", "gen", "unitary-c6", "--count", "3"});
  const Outcome b = run({"--seed", "1", "gen", "unitary-c6", "--count", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const io::Document d = io::parse_document(line);
    ASSERT_TRUE(d.herm);
    EXPECT_TRUE(is_unitary(*d.herm));
    ++n;
  }
  EXPECT_EQ(n, 3);
  EXPECT_NE(a.out, run({"--seed", "2", "gen", "unitary-c6", "--count", "3"}).out);
}

TEST_F(CliTest, GenToDirectory) {
  const Outcome r = run({"--out", dir_.string(), "gen", "min-projection-c6", "--count", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "min-projection-c6-0.json"));
  EXPECT_TRUE(fs::exists(dir_ / "min-projection-c6-1.json"));
  EXPECT_NE(run({"gen", "nosuch"}).code, 0);
}

TEST_F(CliTest, DocumentRoundTrip) {
  Rng rng(73);
  for (const HermMatrix& x : {random_herm(rng, 3, 3), random_herm(rng, 4, 2)}) {
    const io::Document d = io::parse_document(io::encode(x).dump());
    ASSERT_TRUE(d.herm);
    const VectorXc& a = d.herm->coords();
    const VectorXc& b = x.coords();
    ASSERT_EQ(a.size(), b.size());
    EXPECT_EQ(std::memcmp(a.data(), b.data(), sizeof(cplx) * static_cast<std::size_t>(a.size())), 0);
  }
  const CDElement o = random_cd(rng, 3);
  const io::Document d = io::parse_document(io::encode(o).dump());
  ASSERT_TRUE(d.cd);
  EXPECT_EQ(max_abs_diff(*d.cd, o), 0.0);
}

TEST_F(CliTest, Spectral) {
  const Outcome r = run({"spectral", write("x.json", diag3(5, 5, 2))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(m=2)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(m=1)"), std::string::npos) << r.out;
}

TEST_F(CliTest, Reduce) {
  Rng rng(74);
  const std::string u = write("u.json", random_unitary(rng));
  const std::string e = write("e.json", random_diagonal_unitary(rng));
  const Outcome r = run({"reduce", u, e});
  ASSERT_EQ(r.code, 0) << r.err;
  const io::json j = io::json::parse(r.out);
  EXPECT_EQ(j["kind"], "reduction_result");
  const std::string path = j["certificate"]["case_path"];
  EXPECT_EQ(path.rfind("Case", 0), 0u) << path;

  const std::string nondiag = write("f.json", random_unitary(rng));
  EXPECT_EQ(run({"reduce", u, nondiag}).code, 2);
}

TEST_F(CliTest, Usage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"dt"}).code, 2);
}
