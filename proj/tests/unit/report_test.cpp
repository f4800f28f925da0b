#include <langford/report.hpp>

#include <gtest/gtest.h>

using namespace langford;

namespace {

auto record(int k, int n, const char * label, std::uint64_t nodes, bool timed_out = false) -> RunRecord
{
    RunRecord r;
    r.instance = Instance::make(k, n);
    r.variant = VariantConfig::parse(label);
    r.nodes = nodes;
    r.timed_out = timed_out;
    return r;
}

constexpr const char * a = "channelled branch:D sym:D cons:Both static";
constexpr const char * b = "channelled branch:P sym:D cons:Both static";

} // namespace

TEST(Report, SingleVariantMean)
{
    auto t = build_node_table({record(2, 7, a, 10), record(2, 8, a, 21), record(3, 9, a, 40)});
    ASSERT_EQ(t.columns.size(), 1U);
    ASSERT_EQ(t.rows.size(), 3U);
    EXPECT_EQ(t.sum[0], 71U);
    EXPECT_EQ(t.mean[0], 24U);
    auto md = render_markdown(t);
    EXPECT_NE(md.find("| Mean | **24** |"), std::string::npos) << md;
    EXPECT_NE(md.find("| Sum | **71** |"), std::string::npos) << md;
}

TEST(Report, TiesAllBold)
{
    auto t = build_node_table({record(2, 7, a, 280), record(2, 7, b, 280)});
    auto md = render_markdown(t);
    EXPECT_NE(md.find("| 02_07 | **280** | **280** |"), std::string::npos) << md;
}

TEST(Report, MinimumBoldAndThousands)
{
    auto t = build_node_table({record(3, 12, a, 24096), record(3, 12, b, 367972)});
    auto md = render_markdown(t);
    EXPECT_NE(md.find("| 03_12 | **24,096** | 367,972 |"), std::string::npos) << md;
}

TEST(Report, SumIsColumnSumOfShownRows)
{
    std::vector<RunRecord> records;
    std::uint64_t expect_a = 0, expect_b = 0;
    for (int n = 5; n <= 9; ++n) {
        records.push_back(record(2, n, a, static_cast<std::uint64_t>(n * 11)));
        records.push_back(record(2, n, b, static_cast<std::uint64_t>(n * 13)));
        expect_a += static_cast<std::uint64_t>(n * 11);
        expect_b += static_cast<std::uint64_t>(n * 13);
    }
    auto t = build_node_table(records);
    EXPECT_EQ(t.sum, (std::vector<std::uint64_t>{expect_a, expect_b}));
}

TEST(Report, TrivialInstancesDropped)
{
    auto t = build_node_table({record(2, 3, "positional sym:P", 2), record(2, 3, a, 0), record(2, 4, "positional sym:P", 12),
        record(2, 4, a, 4)});
    ASSERT_EQ(t.rows.size(), 1U);
    EXPECT_EQ(t.rows[0].instance, Instance::make(2, 4));
    EXPECT_EQ(t.trivial_instances, 1U);
}

TEST(Report, TimeoutCellsExcluded)
{
    auto t = build_node_table({record(2, 9, a, 100), record(2, 9, b, 5000, true), record(2, 10, a, 300), record(2, 10, b, 900)});
    EXPECT_EQ(t.sum[1], 900U);
    EXPECT_EQ(t.mean[1], 900U);
    auto md = render_markdown(t);
    EXPECT_NE(md.find("| 02_09 | **100** | t/o |"), std::string::npos) << md;
}

TEST(Report, GroupThousands)
{
    EXPECT_EQ(group_thousands(0), "0");
    EXPECT_EQ(group_thousands(999), "999");
    EXPECT_EQ(group_thousands(1000), "1,000");
    EXPECT_EQ(group_thousands(1234567), "1,234,567");
}
