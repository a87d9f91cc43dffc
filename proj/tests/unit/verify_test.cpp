#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "pdtrank/verify.hpp"

namespace pdtrank {
namespace {

const std::filesystem::path kData = PDTRANK_TEST_DATA_DIR;

TEST(Registry, NamesAndOrder) {
    std::vector<std::string> names;
    for (const auto& c : check_registry()) names.push_back(c.name);
    EXPECT_EQ(names, (std::vector<std::string>{
                         "delta-roundtrip", "phi-bijection", "class-partition", "a-implies-rank0",
                         "ndt-nmdt-equal", "theorem-1-1", "congruence-pd", "congruence-pdt", "pdtgf-vs-enum",
                         "pd-prefactor-vs-enum", "identity-3-2", "identity-3-5", "dissection-zero", "bridge-G",
                         "crank-gf", "table-2-1", "table-4-2"}));
    EXPECT_NE(find_check("bridge-G"), nullptr);
    EXPECT_EQ(find_check("bridge-g"), nullptr);
    EXPECT_EQ(find_check(""), nullptr);
}

TEST(Registry, EveryCheckPassesWithSmallBounds) {
    CheckParams small;
    small.max_n = 11;
    small.terms = 60;
    small.data_dir = kData;
    for (const auto& c : check_registry()) {
        const CheckReport r = run_check(c, small);
        EXPECT_EQ(r.name, c.name);
        EXPECT_TRUE(r.passed) << format_report(r);
        EXPECT_FALSE(r.first_failure.has_value()) << c.name;
        EXPECT_FALSE(r.range.empty()) << c.name;
    }
}

TEST(Registry, DefaultsAreFilledIn) {
    const CheckReport r = run_check(*find_check("crank-gf"));
    EXPECT_TRUE(r.passed);
    EXPECT_NE(r.range.find("20"), std::string::npos) << r.range;
}

class TamperedDataDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("pdtrank_verify_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
        std::filesystem::create_directories(dir_);
        std::ifstream in(kData / "table_2_1.tsv");
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        const std::string row = "~5'\t5\t∅\t0";
        text.replace(text.find(row), row.size(), "~5'\t5\t∅\t3");
        std::ofstream(dir_ / "table_2_1.tsv") << text;
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::filesystem::path dir_;
};

TEST_F(TamperedDataDir, FailingReportCarriesWitness) {
    CheckParams p;
    p.data_dir = dir_;
    const CheckReport r = run_check(*find_check("table-2-1"), p);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.first_failure.has_value());
    EXPECT_EQ(r.first_failure->n, 5);
    const std::string text = format_report(r);
    EXPECT_EQ(text.rfind("FAIL\ttable-2-1\t", 0), 0u) << text;
    EXPECT_NE(text.find("~5'"), std::string::npos) << text;

    const auto j = to_json(r);
    EXPECT_EQ(j["verdict"], "fail");
    EXPECT_EQ(j["first_failure"]["n"], 5);
}

TEST(Verify, MissingDataDirFails) {
    CheckParams p;
    p.data_dir = "/nonexistent/pdtrank";
    const CheckReport r = run_check(*find_check("table-4-2"), p);
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(r.first_failure.has_value());
}

TEST(Verify, ReportFormats) {
    const CheckReport r = run_check(*find_check("identity-3-2"), CheckParams{0, 20, {}});
    EXPECT_EQ(format_report(r), "PASS\tidentity-3-2\tterms <= 20\n");
    const auto j = to_json(r);
    EXPECT_EQ(j["check"], "identity-3-2");
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_TRUE(j["first_failure"].is_null());
    EXPECT_TRUE(j["notes"].is_array());

    const CheckReport t = run_check(*find_check("table-4-2"));
    EXPECT_TRUE(t.passed);
    ASSERT_EQ(t.notes.size(), 1u);
    EXPECT_NE(format_report(t).find("  note: documented deviation"), std::string::npos);
}

}  // namespace
}  // namespace pdtrank
