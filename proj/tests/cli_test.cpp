#include "oddpow/cli.hpp"
#include "oddpow/selftest.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace oddpow::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("oddpow_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                 "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

TEST(Coeffs, TextRendersIdentity) {
    const Result r = invoke({"coeffs", "--m", "3"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_NE(r.out.find("x^7 = Σ_{k=1}^{x} 140·k^3·(x-k)^3 - 14·k·(x-k) + 1\n"), std::string::npos)
        << r.out;
    EXPECT_NE(r.out.find("row: 1, -14, 0, 140\n"), std::string::npos);
    EXPECT_NE(r.out.find("140"), std::string::npos);
    EXPECT_NE(r.out.find("-14"), std::string::npos);
    EXPECT_NE(r.out.find("+ 1"), std::string::npos);
    EXPECT_NE(r.out.find("agree"), std::string::npos);
}

TEST(Coeffs, ZeroRowJson) {
    const Result r = invoke({"coeffs", "--m", "0", "--format", "json"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(r.out, "{\"m\":0,\"coefficients\":[{\"r\":0,\"value\":\"1\"}]}\n");
}

TEST(Coeffs, Csv) {
    const Result r = invoke({"coeffs", "--m", "2", "--format", "csv"});
    EXPECT_EQ(r.out, "m,r,value\n2,0,1\n2,1,0\n2,2,30\n");
}

TEST(Coeffs, SixthRowNotesPublishedDivergence) {
    const Result r = invoke({"coeffs", "--m", "6"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_NE(r.out.find("12012·k^6·(x-k)^6"), std::string::npos);
    EXPECT_NE(r.out.find("recursion and linear solve agree"), std::string::npos);
    EXPECT_NE(r.out.find("note:"), std::string::npos);
    EXPECT_NE(r.out.find("51480"), std::string::npos);
}

TEST(Coeffs, MissingMIsUsageError) {
    const Result r = invoke({"coeffs"});
    EXPECT_EQ(r.code, kUsage);
    EXPECT_NE(r.err.find("usage error"), std::string::npos);
}

TEST(Usage, BadInputs) {
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
    EXPECT_EQ(invoke({"coeffs", "--m", "-1"}).code, kUsage);
    EXPECT_EQ(invoke({"coeffs", "--m", "two"}).code, kUsage);
    EXPECT_EQ(invoke({"coeffs", "--m", "1", "--format", "xml"}).code, kUsage);
    EXPECT_EQ(invoke({"verify", "--m", "1", "--mode", "fuzzy"}).code, kUsage);
    EXPECT_EQ(invoke({"export"}).code, kUsage);
    EXPECT_EQ(invoke({"--help"}).code, kSuccess);
}

TEST(Verify, SymbolicPasses) {
    const Result r = invoke({"verify", "--m", "2", "--mode", "symbolic"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(r.out, "m=2 symbolic [polynomial]: passed\n");
}

TEST(Verify, NumericTableOne) {
    const Result r = invoke({"verify", "--m", "1", "--x-max", "7", "--mode", "numeric", "--format", "json"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(r.out,
              "[{\"m\":1,\"mode\":\"numeric\",\"range\":\"0..7\",\"passed\":true,\"first_failure\":null}]\n");
}

TEST(Verify, AllModes) {
    const Result r = invoke({"verify", "--m", "9", "--mode", "all", "--x-max", "50"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(count_lines(r.out), 3u);
    EXPECT_EQ(r.out.find("FAILED"), std::string::npos);
}

TEST(Verify, DefaultsAreAllModesToHundred) {
    const Result r = invoke({"verify", "--m", "1", "--format", "csv"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(r.out,
              "m,mode,range,passed,x,expected,actual\n"
              "1,numeric,0..100,true,,,\n"
              "1,symbolic,polynomial,true,,,\n"
              "1,symmetry,1..100,true,,,\n");
}

TEST(Expand, PrintsPolynomialAndVerdict) {
    const Result r = invoke({"expand", "--m", "2"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_NE(r.out.find("C_2(x) = 1/30*x^5 - 1/30*x"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("sum_r A(2,r)*C_r(x) = x^5\nequals x^5\n"), std::string::npos) << r.out;
    const Result j = invoke({"expand", "--m", "3", "--format", "json"});
    EXPECT_EQ(j.out, "{\"m\":3,\"expansion\":\"x^7\",\"target\":\"x^7\",\"equal\":true}\n");
}

TEST(Bernoulli, Values) {
    EXPECT_EQ(invoke({"bernoulli", "--n", "1"}).out, "1/2\n");
    EXPECT_EQ(invoke({"bernoulli", "--n", "7"}).out, "0\n");
    EXPECT_EQ(invoke({"bernoulli", "--n", "8"}).out, "-1/30\n");
    EXPECT_EQ(invoke({"bernoulli", "--n", "8", "--format", "json"}).out, "{\"n\":8,\"value\":\"-1/30\"}\n");
    EXPECT_EQ(invoke({"bernoulli"}).code, kUsage);
}

TEST(Export, CsvToStdout) {
    const Result r = invoke({"export", "--m-max", "1", "--format", "csv"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(r.out, "m,r,value\n0,0,1\n1,0,1\n1,1,6\n");
}

TEST(Export, JsonSingleRow) {
    const Result r = invoke({"export", "--m-max", "0", "--format", "json"});
    EXPECT_EQ(r.out, "[{\"m\":0,\"coefficients\":[{\"r\":0,\"value\":\"1\"}]}]\n");
}

TEST(Export, BFileListing) {
    const Result r = invoke({"export", "--m-max", "5"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_EQ(count_lines(r.out), 21u);
    EXPECT_EQ(r.out.substr(0, 12), "1 1\n2 1\n3 6\n");
    EXPECT_NE(r.out.find("\n21 2772\n"), std::string::npos);
}

TEST(Export, JsonRoundTripsByteForByte) {
    const Result r = invoke({"export", "--m-max", "12", "--format", "json"});
    ASSERT_EQ(r.code, kSuccess);
    const Json parsed = Json::parse(r.out);
    EXPECT_EQ(parsed.dump() + "\n", r.out);
    for (std::size_t m = 0; m <= 12; ++m) {
        EXPECT_EQ(parsed[m]["m"].get<std::size_t>(), m);
        EXPECT_EQ(row_from_json(parsed[m]), coeff_row(m));
    }
}

TEST(Export, WritesFileAndCompanionListing) {
    TempDir dir;
    const auto path = dir.path() / "rows.csv";
    const Result r = invoke({"export", "--m-max", "5", "--format", "csv", "--out", path.string()});
    ASSERT_EQ(r.code, kSuccess);
    EXPECT_TRUE(r.out.empty());
    const std::string csv = slurp(path);
    EXPECT_EQ(count_lines(csv), 22u);
    EXPECT_EQ(slurp(path.string() + ".b.txt"), invoke({"export", "--m-max", "5"}).out);
}

TEST(Export, UnwritablePathIsIoError) {
    TempDir dir;
    const auto path = dir.path() / "missing" / "dir" / "rows.json";
    const Result r = invoke({"export", "--m-max", "2", "--format", "json", "--out", path.string()});
    EXPECT_EQ(r.code, kIoError);
    EXPECT_NE(r.err.find("cannot write"), std::string::npos);
}

TEST(Selftest, PassesAndIsDeterministic) {
    const Result first = invoke({"selftest"});
    EXPECT_EQ(first.code, kSuccess) << first.out;
    EXPECT_NE(first.out.find("all checks passed"), std::string::npos);
    EXPECT_NE(first.out.find("x^13 divergence recorded"), std::string::npos);
    EXPECT_NE(first.out.find("12012"), std::string::npos);
    EXPECT_NE(first.out.find("51480"), std::string::npos);
    EXPECT_EQ(invoke({"selftest"}).out, first.out);
}

TEST(Selftest, DetectsCorruptedEntry) {
    const RowSource corrupted = [](std::size_t m) {
        CoeffRow row = coeff_row(m);
        if (m == 9) row[3] += Rational(1);
        return row;
    };
    std::ostringstream out;
    EXPECT_EQ(run_selftest(corrupted, out), 1);
    EXPECT_NE(out.str().find("[FAIL] recursion agrees with linear solve"), std::string::npos) << out.str();
    EXPECT_NE(out.str().find("first mismatch at m=9"), std::string::npos);
    EXPECT_NE(out.str().find("checks FAILED"), std::string::npos);
}

TEST(Selftest, ConstantTermViolationIsLoud) {
    const RowSource corrupted = [](std::size_t m) {
        CoeffRow row = coeff_row(m);
        if (m == 17) row[0] = Rational(2);
        return row;
    };
    std::ostringstream out;
    EXPECT_EQ(run_selftest(corrupted, out), 1);
    EXPECT_NE(out.str().find("CONSTANT TERM VIOLATED: A(17,0) = 2"), std::string::npos);
    EXPECT_NE(out.str().find("[FAIL] constant term"), std::string::npos);
}

TEST(ExitCodes, OnlyDocumentedValues) {
    const std::vector<std::vector<std::string>> cases = {
        {"coeffs", "--m", "4"}, {"verify", "--m", "3", "--x-max", "10"}, {"expand", "--m", "1"},
        {"bernoulli", "--n", "0"}, {"export", "--m-max", "3"}, {"coeffs"}, {"nope"},
    };
    for (const auto& args : cases) {
        const int code = invoke(args).code;
        EXPECT_TRUE(code >= 0 && code <= 3) << code;
    }
}

}  // namespace
}  // namespace oddpow::cli
