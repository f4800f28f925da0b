#include <langford/domain.hpp>
#include <langford/store.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace langford;

TEST(DomainSet, FullRange)
{
    DomainSet d(3, 7);
    EXPECT_EQ(d.size(), 5U);
    EXPECT_EQ(d.min(), 3);
    EXPECT_EQ(d.max(), 7);
    EXPECT_FALSE(d.contains(2));
    EXPECT_TRUE(d.contains(5));
    EXPECT_FALSE(d.assigned());
}

TEST(DomainSet, InvertedRangeIsEmpty)
{
    EXPECT_TRUE(DomainSet(5, 4).empty());
}

TEST(DomainSet, EraseAbsentIsNoop)
{
    DomainSet d(1, 4);
    EXPECT_FALSE(d.erase(9));
    EXPECT_FALSE(d.erase(0));
    EXPECT_TRUE(d.erase(2));
    EXPECT_FALSE(d.erase(2));
    EXPECT_EQ(d.size(), 3U);
}

TEST(DomainSet, MinMaxFollowErasures)
{
    DomainSet d(1, 130);
    for (int v = 1; v <= 100; ++v)
        d.erase(v);
    EXPECT_EQ(d.min(), 101);
    for (int v = 130; v >= 120; --v)
        d.erase(v);
    EXPECT_EQ(d.max(), 119);
    d.insert(1);
    EXPECT_EQ(d.min(), 1);
}

TEST(DomainSet, FromValues)
{
    auto d = DomainSet::from_values({7, 2, 5});
    EXPECT_EQ(d.values(), (std::vector<int>{2, 5, 7}));
    EXPECT_EQ(d.min(), 2);
    EXPECT_EQ(d.max(), 7);
}

TEST(DomainSet, NegativeValues)
{
    DomainSet d(-3, 2);
    EXPECT_TRUE(d.contains(-3));
    d.erase(-3);
    EXPECT_EQ(d.min(), -2);
}

TEST(DomainSet, RandomAgreesWithReferenceSet)
{
    std::mt19937 rng(11);
    for (int round = 0; round < 200; ++round) {
        DomainSet d(-5, 70);
        std::vector<char> ref(76, 1);
        for (int step = 0; step < 60; ++step) {
            int v = std::uniform_int_distribution<int>(-8, 73)(rng);
            bool present = v >= -5 && v <= 70 && ref[static_cast<std::size_t>(v + 5)];
            EXPECT_EQ(d.erase(v), present);
            if (present)
                ref[static_cast<std::size_t>(v + 5)] = 0;
        }
        std::vector<int> expect;
        for (int v = -5; v <= 70; ++v)
            if (ref[static_cast<std::size_t>(v + 5)])
                expect.push_back(v);
        ASSERT_EQ(d.values(), expect);
        if (! expect.empty()) {
            EXPECT_EQ(d.min(), expect.front());
            EXPECT_EQ(d.max(), expect.back());
        }
    }
}

TEST(Store, BranchExample)
{
    Store s({DomainSet::from_values({2, 5, 7})});
    VarId x{0};
    s.mark();
    ASSERT_TRUE(s.assign(x, 2));
    EXPECT_EQ(s.domain(x).values(), (std::vector<int>{2}));
    s.undo_to_mark();
    s.mark();
    ASSERT_TRUE(s.remove(x, 2));
    EXPECT_EQ(s.domain(x).values(), (std::vector<int>{5, 7}));
    s.undo_to_mark();
    EXPECT_EQ(s.domain(x).values(), (std::vector<int>{2, 5, 7}));
}

TEST(Store, WipeoutReportedAndUndone)
{
    Store s({DomainSet(1, 3)});
    s.mark();
    EXPECT_FALSE(s.assign(VarId{0}, 9));
    EXPECT_TRUE(s.domain(VarId{0}).empty());
    s.undo_to_mark();
    EXPECT_EQ(s.domain(VarId{0}), DomainSet(1, 3));
}

TEST(Store, BoundsRemoval)
{
    Store s({DomainSet(1, 10)});
    ASSERT_TRUE(s.remove_below(VarId{0}, 4));
    ASSERT_TRUE(s.remove_above(VarId{0}, 6));
    EXPECT_EQ(s.domain(VarId{0}), DomainSet(4, 6));
    EXPECT_FALSE(s.remove_above(VarId{0}, 3));
}

TEST(Store, ChangedVariablesListedOnce)
{
    Store s({DomainSet(1, 5), DomainSet(1, 5), DomainSet(1, 5)});
    ASSERT_TRUE(s.remove(VarId{2}, 1));
    ASSERT_TRUE(s.remove(VarId{2}, 2));
    ASSERT_TRUE(s.remove(VarId{0}, 1));
    ASSERT_TRUE(s.remove(VarId{0}, 9));
    auto changed = s.take_changed();
    ASSERT_EQ(changed.size(), 2U);
    EXPECT_EQ(changed[0], VarId{2});
    EXPECT_EQ(changed[1], VarId{0});
    EXPECT_TRUE(s.take_changed().empty());
}

TEST(Store, RemovalCounterIsMonotone)
{
    Store s({DomainSet(1, 5)});
    s.mark();
    ASSERT_TRUE(s.remove(VarId{0}, 1));
    ASSERT_TRUE(s.remove(VarId{0}, 1));
    EXPECT_EQ(s.removals(), 1U);
    s.undo_to_mark();
    EXPECT_EQ(s.removals(), 1U);
}

TEST(Store, NestedMarksRestoreBitExactly)
{
    std::mt19937 rng(5);
    std::vector<DomainSet> initial;
    for (int i = 0; i < 6; ++i)
        initial.emplace_back(1, 9);
    Store s(initial);
    std::vector<std::vector<DomainSet>> snapshots;
    for (int depth = 0; depth < 20; ++depth) {
        snapshots.push_back(s.domains());
        s.mark();
        for (int step = 0; step < 3; ++step) {
            VarId v{static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 5)(rng))};
            if (s.domain(v).size() > 1)
                (void)s.remove(v, s.domain(v).min());
        }
    }
    while (s.depth() > 0) {
        s.undo_to_mark();
        EXPECT_EQ(s.domains(), snapshots.back());
        snapshots.pop_back();
    }
    EXPECT_EQ(s.domains(), initial);
}
