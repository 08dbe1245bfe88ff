#include "nrssp/io.hpp"

#include <random>

#include <gtest/gtest.h>

#include "nrssp/approx.hpp"
#include "nrssp/gen.hpp"
#include "test_support.hpp"

namespace nrssp {
namespace {

using testing::R;
using testing::Rs;

TEST(InstanceFormatTest, ParsesDocumentedLayout) {
    const Instance inst = io::parse_instance(R"({
        "jobs": [{"p": "1/20", "a": "0.95"}, {"p": "1/20", "a": 1}, {"p": "1", "a": "21/20"}],
        "supplies": [{"u": "0", "b": "19/20"}, {"u": "0.05", "b": "1"}, {"u": "1/10", "b": "21/20"}]
    })");
    EXPECT_EQ(inst, gen_tight(R("1/20")));
}

TEST(InstanceFormatTest, WritesCanonicalStrings) {
    const std::string text = io::format_instance(gen_tight(R("1/20")));
    EXPECT_NE(text.find("\"19/20\""), std::string::npos);
    EXPECT_NE(text.find("\"u\": \"1/10\""), std::string::npos);
}

TEST(InstanceFormatTest, RoundTrip) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        const Instance inst = testing::random_instance(rng, 1, 8, 1, 5, false, true, 7, 9);
        ASSERT_EQ(io::parse_instance(io::format_instance(inst)), inst);
    }
}

void expect_parse_error(std::string_view text, std::string_view fragment) {
    try {
        io::parse_instance(text);
        FAIL() << "accepted: " << text;
    } catch (const io::ParseError& e) {
        EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
}

TEST(InstanceFormatTest, ErrorsNameTheLocation) {
    expect_parse_error(R"({"jobs": [{"p": "1", "a": "1"}], "supplies": [)", "byte");
    expect_parse_error(R"({"jobs": [], "supplies": [], "extra": 1})", "unknown key \"extra\"");
    expect_parse_error(R"({"jobs": [{"p": "1", "a": "1", "w": "1"}], "supplies": []})",
                       "/jobs/0: unknown key \"w\"");
    expect_parse_error(R"({"jobs": [{"p": "1", "a": "x"}], "supplies": [{"u": "0", "b": "1"}]})",
                       "/jobs/0/a");
    expect_parse_error(R"({"jobs": [{"p": 0.5, "a": "1"}], "supplies": [{"u": "0", "b": "1"}]})",
                       "/jobs/0/p");
    expect_parse_error(R"({"jobs": [{"p": "1"}], "supplies": [{"u": "0", "b": "1"}]})",
                       "missing key \"a\"");
    expect_parse_error(R"({"supplies": [{"u": "0", "b": "1"}]})", "missing key \"jobs\"");
    expect_parse_error(R"({"jobs": [{"p": "1", "a": "1"}], "supplies": [{"u": "1", "b": "1"},
                          {"u": "1", "b": "1"}]})",
                       "strictly increasing");
    expect_parse_error(R"([1, 2])", "expected an object");
}

TEST(ScheduleFormatTest, RoundTripAndLayout) {
    const Instance tight = gen_tight(R("1/20"));
    const Permutation order = order_jobs(tight);
    const io::ScheduleDocument doc =
        io::make_schedule_document(tight, order, list_schedule(tight, order));
    const std::string text = io::format_schedule(doc);
    EXPECT_EQ(text,
              "{\n  \"completion\": [\n    \"23/20\",\n    \"11/10\",\n    \"21/20\"\n  ],\n"
              "  \"objective\": \"659/200\",\n  \"order\": [\n    3,\n    2,\n    1\n  ]\n}\n");
    EXPECT_EQ(io::parse_schedule(text), doc);
    EXPECT_EQ(*doc.objective, R("1318/400"));
}

TEST(ScheduleFormatTest, OptionalFieldsAndErrors) {
    const io::ScheduleDocument bare = io::parse_schedule(R"({"completion": ["1", "3/2"]})");
    EXPECT_FALSE(bare.order.has_value());
    EXPECT_FALSE(bare.objective.has_value());
    EXPECT_EQ(bare.schedule.completion, Rs({"1", "3/2"}));
    EXPECT_THROW(io::parse_schedule(R"({"completion": ["1"], "order": [1, 2]})"), io::ParseError);
    EXPECT_THROW(io::parse_schedule(R"({"completion": ["1", "2"], "order": [1, 1]})"),
                 io::ParseError);
    EXPECT_THROW(io::parse_schedule(R"({"completion": ["1"], "note": 1})"), io::ParseError);
}

TEST(OrderFormatTest, ArrayOrObject) {
    EXPECT_EQ(io::parse_order("[3, 2, 1]"), Permutation::from_one_based({3, 2, 1}));
    EXPECT_EQ(io::parse_order(R"({"order": [2, 1], "completion": []})"),
              Permutation::from_one_based({2, 1}));
    EXPECT_THROW(io::parse_order("[0, 1]"), io::ParseError);
    EXPECT_THROW(io::parse_order("\"3 2 1\""), io::ParseError);
}

TEST(BenchFormatTest, CsvColumns) {
    BenchReport report;
    BenchRecord rec;
    rec.instance_id = "tight-000000";
    rec.n = 3;
    rec.q = 3;
    rec.f_approx = R("1318/400");
    rec.f_exact = R("521/400");
    rec.ratio = R("1318/521");
    rec.order_approx = Permutation::from_one_based({3, 2, 1});
    rec.order_exact = Permutation::identity(3);
    report.records.push_back(rec);
    EXPECT_EQ(io::format_bench_csv(report),
              "instance_id,n,q,f_approx,f_exact,ratio_exact,ratio_decimal,order_approx,"
              "order_exact\n"
              "tight-000000,3,3,659/200,521/400,1318/521,2.52975047985,3 2 1,1 2 3\n");
}

}  // namespace
}  // namespace nrssp
