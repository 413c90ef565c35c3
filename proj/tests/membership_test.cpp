#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "wbc/membership.hpp"

using namespace wbc;

TEST(Membership, ReproducesTrainingPoints)
{
    for (const auto& ds : {default_red_set(), default_blue_set()}) {
        for (const auto& p : ds.points()) {
            EXPECT_NEAR(ds.interpolate(p.x), p.y, 1e-9);
            EXPECT_NEAR(membership(ds, p.x), p.y, 1e-9);
        }
    }
}

TEST(Membership, LinearCase)
{
    const MembershipDataSet ds("line", {{0, 0}, {1, 1}});
    EXPECT_DOUBLE_EQ(membership(ds, 0.5), 0.5);
}

TEST(Membership, ZeroOutsideSupport)
{
    const MembershipDataSet ds("step", {{10, 0}, {20, 1}});
    EXPECT_EQ(membership(ds, 5), 0.0);
    EXPECT_EQ(membership(ds, 20.0001), 0.0);
}

TEST(Membership, ClampedToUnitInterval)
{
    // The cubic through these nodes overshoots between them.
    const MembershipDataSet ds("wiggle", {{0, 0}, {1, 1}, {2, 1}, {3, 0}});
    EXPECT_GT(ds.interpolate(1.5), 1.0);
    EXPECT_EQ(membership(ds, 1.5), 1.0);
}

TEST(Membership, DefaultRedSetValues)
{
    const auto red = default_red_set();
    EXPECT_NEAR(hue_membership(red, 0.0), 1.0, 1e-9);
    EXPECT_NEAR(hue_membership(red, 10.0), 1.0, 1e-9);
    EXPECT_NEAR(hue_membership(red, 350.0), 0.8, 1e-9);
    EXPECT_EQ(hue_membership(red, 120.0), 0.0);
    EXPECT_EQ(hue_membership(red, 240.0), 0.0);
}

TEST(Membership, RejectsBadDataSets)
{
    EXPECT_THROW(MembershipDataSet("one", {{1, 0}}), std::invalid_argument);
    EXPECT_THROW(MembershipDataSet("dup", {{1, 0}, {1, 1}}), std::invalid_argument);
    EXPECT_THROW(MembershipDataSet("range", {{1, 0}, {2, 1.5}}), std::invalid_argument);
    EXPECT_THROW(MembershipDataSet("nan", {{1, 0}, {std::nan(""), 1}}), std::invalid_argument);
}

TEST(Membership, ParseTable)
{
    const auto ds = MembershipDataSet::parse("t", "# hue degree\n180 0\n\n220 0.9  # rising\n240 1\n280 0\n");
    ASSERT_EQ(ds.points().size(), 4u);
    EXPECT_EQ(ds.min_x(), 180.0);
    EXPECT_EQ(ds.max_x(), 280.0);
    EXPECT_THROW(MembershipDataSet::parse("t", "180 0\n220\n"), std::invalid_argument);
    EXPECT_THROW(MembershipDataSet::parse("t", "180 0\n220 x\n"), std::invalid_argument);
}

TEST(Membership, LoadFile)
{
    const auto path = std::filesystem::temp_directory_path() / "wbc_membership_test.txt";
    std::ofstream(path) << "0 0\n1 1\n";
    EXPECT_DOUBLE_EQ(membership(MembershipDataSet::load("f", path), 0.25), 0.25);
    EXPECT_THROW(MembershipDataSet::load("f", path.string() + ".missing"), std::invalid_argument);
}

TEST(ClassifyColor, DefaultSets)
{
    const std::vector<MembershipDataSet> sets{default_red_set(), default_blue_set()};
    EXPECT_EQ(classify_color(240.0, sets), "blue");
    EXPECT_EQ(classify_color(0.0, sets), "red");
    EXPECT_EQ(classify_color(120.0, sets), kUnknownColor);
}

TEST(ClassifyColor, OrderInvariantWhenDistinct)
{
    std::vector<MembershipDataSet> sets{default_red_set(), default_blue_set()};
    std::vector<MembershipDataSet> reversed{default_blue_set(), default_red_set()};
    for (double h = 0.0; h < 360.0; h += 0.5) {
        const double r = hue_membership(sets[0], h);
        const double b = hue_membership(sets[1], h);
        if (r != b) {
            EXPECT_EQ(classify_color(h, sets), classify_color(h, reversed)) << h;
        }
    }
}

TEST(Membership, RandomDataSets)
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> xs(-100.0, 100.0);
    std::uniform_real_distribution<double> ys(0.0, 1.0);
    std::uniform_int_distribution<int> count(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<MembershipPoint> pts;
        const int n = count(rng);
        while (static_cast<int>(pts.size()) < n) {
            const double x = xs(rng);
            bool close = false;
            for (const auto& p : pts) {
                close = close || std::abs(p.x - x) < 1.0;
            }
            if (!close) {
                pts.push_back({x, ys(rng)});
            }
        }
        const MembershipDataSet ds("r", pts);
        for (const auto& p : pts) {
            EXPECT_NEAR(ds.interpolate(p.x), p.y, 1e-9);
        }
        EXPECT_EQ(membership(ds, ds.min_x() - 1e-6), 0.0);
        EXPECT_EQ(membership(ds, ds.max_x() + 1e-6), 0.0);
    }
}
