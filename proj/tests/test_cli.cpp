#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sepcat/cli.hpp"
#include "sepcat/io.hpp"

namespace sepcat {
namespace {

namespace fs = std::filesystem;

const fs::path kData = SEPCAT_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome sepcat(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (kData / name).string(); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sepcat_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  void write(const std::string& path, const std::string& text) const { std::ofstream(path) << text; }

  fs::path dir_;
};

TEST_F(Cli, SeparableGroupAlgebraEmitsVerifiedCertificate) {
  const auto r = sepcat({"separability", "check", data("z2_over_Q.json"), "--certificate-out", tmp("cert.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a[x][x] = 1/2 e (x) e + 1/2 g (x) g"), std::string::npos);
  EXPECT_EQ(sepcat({"separability", "verify", data("z2_over_Q.json"), "--certificate", tmp("cert.json")}).code, 0);
}

TEST_F(Cli, ChainIsNotSeparable) {
  const auto r = sepcat({"separability", "check", data("a2_over_Q.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("separable: no"), std::string::npos);
}

TEST_F(Cli, VerifyRejectsWrongCertificate) {
  write(tmp("bad.json"), R"([{"x":"x","y":"x","terms":[{"coeff":"1","u":"e","v":"e"}]}])");
  const auto r = sepcat({"separability", "verify", data("z2_over_Q.json"), "--certificate", tmp("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("naturality fails"), std::string::npos);
}

TEST_F(Cli, CohomologyOfGroupAlgebraInCharacteristicTwo) {
  const auto r = sepcat({"cohomology", data("z2_over_F2.json"), "--bimodule", "canonical", "--max-degree", "1", "-o",
                         tmp("h.json")});
  EXPECT_EQ(r.code, 0);
  const Json j = read_json_file(tmp("h.json"));
  EXPECT_EQ(j["degrees"][1]["dim_H"], 2);
  EXPECT_EQ(j["budget_exceeded"], false);
}

TEST_F(Cli, BudgetExceededExitsThreeAndFlagsReport) {
  const auto r = sepcat({"cohomology", data("z2_over_Q.json"), "--max-degree", "3", "--budget", "10", "-o",
                         tmp("h.json")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget exceeded"), std::string::npos);
  EXPECT_EQ(read_json_file(tmp("h.json"))["budget_exceeded"], true);
}

TEST_F(Cli, ObstructionAndLes) {
  EXPECT_EQ(sepcat({"obstruction", data("z2_over_Q.json")}).code, 0);
  EXPECT_EQ(sepcat({"obstruction", data("a2_over_Q.json")}).code, 1);
  const auto r = sepcat({"les", data("a2_over_Q.json"), "--ses", "kernel-comp", "-o", tmp("les.json")});
  EXPECT_EQ(r.code, 0);
  const Json j = read_json_file(tmp("les.json"));
  EXPECT_EQ(j["exact"], true);
  EXPECT_GE(j["degrees"][0]["connecting_rank"].get<int>(), 1);
}

TEST_F(Cli, CriteriaCrossCheck) {
  EXPECT_EQ(sepcat({"maschke", data("z2_group.json"), "--field", "Q"}).code, 0);
  EXPECT_EQ(sepcat({"maschke", data("z2_group.json"), "--field", "Fp:2"}).code, 1);
  EXPECT_EQ(sepcat({"delta", data("a2_chain.json")}).code, 1);
  EXPECT_EQ(sepcat({"delta", data("discrete3.json")}).code, 0);
}

TEST_F(Cli, ModuleSplitAndZelinsky) {
  ASSERT_EQ(sepcat({"separability", "check", data("z2_over_Q.json"), "--certificate-out", tmp("cert.json")}).code, 0);
  for (const char* m : {"regular", "random"}) {
    EXPECT_EQ(sepcat({"module", "split", data("z2_over_Q.json"), "--module", m, "--certificate", tmp("cert.json")}).code,
              0);
  }
  EXPECT_EQ(sepcat({"zelinsky", data("z2_over_Q.json"), "--certificate", tmp("cert.json")}).code, 0);
}

TEST_F(Cli, ValidateDetectsDocumentKind) {
  EXPECT_EQ(sepcat({"validate", data("z2_over_Q.json")}).code, 0);
  EXPECT_EQ(sepcat({"validate", data("a2_chain.json")}).code, 0);
  write(tmp("bad_cat.json"), R"({"field":"Q","objects":["x"],"homs":[{"from":"x","to":"x","basis":["e"]}],
    "identity":{"x":{"e":"1"}},"composition":[]})");
  const auto r = sepcat({"validate", tmp("bad_cat.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation"), std::string::npos);
}

TEST_F(Cli, ValidatesModuleFilesAgainstCategory) {
  write(tmp("m.json"), R"({"spaces":[{"x":"x","dim":1}],"action":[{"f":"e","matrix":[["1"]]},{"f":"g","matrix":[["-1"]]}]})");
  EXPECT_EQ(sepcat({"validate", tmp("m.json"), "--category", data("z2_over_Q.json")}).code, 0);
  write(tmp("m.json"), R"({"spaces":[{"x":"x","dim":1}],"action":[{"f":"e","matrix":[["1"]]},{"f":"g","matrix":[["2"]]}]})");
  EXPECT_EQ(sepcat({"validate", tmp("m.json"), "--category", data("z2_over_Q.json")}).code, 1);
}

TEST_F(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(sepcat({}).code, 2);
  EXPECT_EQ(sepcat({"separability", "check", tmp("missing.json")}).code, 2);
  EXPECT_EQ(sepcat({"separability", "check", data("z2_over_Q.json"), "--unknown"}).code, 2);
  EXPECT_EQ(sepcat({"linearize", data("z2_group.json"), "--field", "Fp:6"}).code, 2);
  write(tmp("junk.json"), "{not json");
  EXPECT_EQ(sepcat({"separability", "check", tmp("junk.json")}).code, 2);
  write(tmp("bad_cat.json"), R"({"field":"Q","objects":["x"],"homs":[{"from":"x","to":"x","basis":["e"]}],
    "identity":{"x":{"e":"1"}},"composition":[]})");
  EXPECT_EQ(sepcat({"separability", "check", tmp("bad_cat.json")}).code, 2);
  EXPECT_EQ(sepcat({"--help"}).code, 0);
}

TEST_F(Cli, ArtifactsAreByteIdenticalAcrossRuns) {
  const std::vector<std::vector<std::string>> commands{
      {"linearize", data("a2_chain.json"), "--field", "Fp:5", "-o"},
      {"cohomology", data("z2_over_Q.json"), "--bimodule", "random", "--seed", "7", "--max-degree", "2", "-o"},
      {"les", data("z2_over_Q.json"), "--ses", "random", "--seed", "3", "-o"},
      {"obstruction", data("a2_over_Q.json"), "-o"},
  };
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      auto args = commands[i];
      const std::string path = tmp("run" + std::to_string(i) + "_" + std::to_string(rep) + ".json");
      args.push_back(path);
      const auto r = sepcat(args);
      EXPECT_TRUE(r.code == 0 || r.code == 1) << r.err;
      if (rep == 0) {
        first = slurp(path);
      } else {
        EXPECT_EQ(slurp(path), first);
      }
    }
  }
}

TEST_F(Cli, LinearizedCategoryRoundTripsThroughFiles) {
  ASSERT_EQ(sepcat({"linearize", data("z2_group.json"), "--field", "Q", "-o", tmp("c.json")}).code, 0);
  EXPECT_EQ(slurp(tmp("c.json")), slurp(data("z2_over_Q.json")));
}

}  // namespace
}  // namespace sepcat
