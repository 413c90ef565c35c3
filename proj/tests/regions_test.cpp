#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "wbc/regions.hpp"

using namespace wbc;

namespace {

BinaryMask disc(int w, int h, double cx, double cy, double r)
{
    BinaryMask m(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) {
                m(x, y) = 1;
            }
        }
    }
    return m;
}

GrayImage paint(const LabelMatrix& lm, std::vector<double> level)
{
    GrayImage g(lm.width(), lm.height());
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.values()[i] = level[lm.label.values()[i]];
    }
    return g;
}

}  // namespace

TEST(Label, Empty)
{
    EXPECT_EQ(label(BinaryMask(5, 5)).count, 0);
}

TEST(Label, TwoBlocks)
{
    BinaryMask m(8, 4);
    for (const Point p : {Point{0, 0}, {1, 0}, {0, 1}, {1, 1}, {5, 2}, {6, 2}, {5, 3}, {6, 3}}) {
        m(p.x, p.y) = 1;
    }
    const LabelMatrix lm = label(m);
    EXPECT_EQ(lm.count, 2);
    EXPECT_TRUE(oracle::same_partition(lm.label, oracle::flood_fill_labels(m, Connectivity::Eight)));
}

TEST(Label, DiagonalNeighbours)
{
    BinaryMask m(2, 2);
    m(0, 0) = 1;
    m(1, 1) = 1;
    EXPECT_EQ(label(m, Connectivity::Eight).count, 1);
    EXPECT_EQ(label(m, Connectivity::Four).count, 2);
}

TEST(Label, RasterOrderNumbering)
{
    // The U's right arm starts at (4, 0) and joins the left arm only at the
    // bottom, after the lone pixel at (2, 1) has been seen.
    BinaryMask m(6, 4);
    for (int y = 0; y < 4; ++y) {
        m(0, y) = 1;
        m(4, y) = 1;
    }
    for (int x = 0; x <= 4; ++x) {
        m(x, 3) = 1;
    }
    m(2, 1) = 1;
    const LabelMatrix lm = label(m, Connectivity::Four);
    ASSERT_EQ(lm.count, 2);
    EXPECT_EQ(lm.label(0, 0), 1);
    EXPECT_EQ(lm.label(4, 0), 1);
    EXPECT_EQ(lm.label(2, 1), 2);
}

TEST(Label, AgreesWithFloodFill)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const BinaryMask m = oracle::random_mask(rng, 1 + trial % 23, 1 + trial % 17, 0.5);
        for (const auto c : {Connectivity::Four, Connectivity::Eight}) {
            const LabelMatrix lm = label(m, c);
            const auto ref = oracle::flood_fill_labels(m, c);
            EXPECT_TRUE(oracle::same_partition(lm.label, ref));
            EXPECT_EQ(lm.count, *std::max_element(ref.values().begin(), ref.values().end()));
        }
    }
}

TEST(ValidContours, SingleContourAlwaysValid)
{
    const BinaryMask m = disc(20, 20, 10, 10, 5);
    const LabelMatrix lm = label(m);
    EXPECT_EQ(valid_contours(lm, paint(lm, {0, 3.0})), std::vector<int>{1});
}

TEST(ValidContours, RatioRule)
{
    BinaryMask m = disc(40, 20, 10, 10, 5);
    const BinaryMask second = disc(40, 20, 30, 10, 5);
    for (std::size_t i = 0; i < m.size(); ++i) {
        m.values()[i] |= second.values()[i];
    }
    const LabelMatrix lm = label(m);
    ASSERT_EQ(lm.count, 2);
    EXPECT_EQ(valid_contours(lm, paint(lm, {0, 200, 160})), std::vector<int>{1});
    EXPECT_EQ(valid_contours(lm, paint(lm, {0, 200, 180})), (std::vector<int>{1, 2}));
    // Exactly factor * max is rejected.
    EXPECT_EQ(valid_contours(lm, paint(lm, {0, 200, 170})), std::vector<int>{1});
}

TEST(ValidContours, AreaFloor)
{
    BinaryMask m = disc(40, 20, 10, 10, 5);
    m(30, 10) = 1;
    const LabelMatrix lm = label(m);
    EXPECT_EQ(valid_contours(lm, paint(lm, {0, 200, 255})), std::vector<int>{});
    EXPECT_EQ(valid_contours(lm, paint(lm, {0, 200, 255}), {0.85, 1}), std::vector<int>{2});
    EXPECT_EQ(valid_contours(label(BinaryMask(4, 4)), GrayImage(4, 4)), std::vector<int>{});
}

TEST(ValidContours, ScaleInvariant)
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> v(0.0, 255.0);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (int trial = 0; trial < 50; ++trial) {
        const BinaryMask m = oracle::random_mask(rng, 30, 30, 0.3);
        const LabelMatrix lm = label(m);
        GrayImage hp(30, 30);
        for (double& x : hp.values()) {
            x = v(rng);
        }
        const double c = scale(rng);
        GrayImage scaled = hp;
        for (double& x : scaled.values()) {
            x *= c;
        }
        const ValidityParams p{0.85, 2};
        EXPECT_EQ(valid_contours(lm, hp, p), valid_contours(lm, scaled, p));
    }
}

TEST(Dilate, Examples)
{
    EXPECT_EQ(count_foreground(dilate(BinaryMask(5, 5))), 0u);
    BinaryMask dot(5, 5);
    dot(2, 2) = 1;
    const BinaryMask d = dilate(dot, StructuringElement::square(1));
    EXPECT_EQ(count_foreground(d), 9u);
    for (int y = 1; y <= 3; ++y) {
        for (int x = 1; x <= 3; ++x) {
            EXPECT_EQ(d(x, y), 1);
        }
    }
    EXPECT_EQ(count_foreground(dilate(dot, StructuringElement::disc(1))), 5u);
}

TEST(Dilate, MatchesDefinition)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const BinaryMask m = oracle::random_mask(rng, 3 + trial % 20, 2 + trial % 13, 0.1);
        for (const auto se : {StructuringElement::square(1), StructuringElement::square(3),
                              StructuringElement::disc(2), StructuringElement::disc(4)}) {
            EXPECT_EQ(dilate(m, se), oracle::dilate_by_definition(m, se));
        }
    }
}

TEST(Dilate, ExtensiveIncreasingTranslationEquivariant)
{
    std::mt19937_64 rng(44);
    const auto se = StructuringElement::square(2);
    for (int trial = 0; trial < 100; ++trial) {
        BinaryMask a(24, 24);
        const BinaryMask inner = oracle::random_mask(rng, 24, 24, 0.15);
        for (int y = 6; y < 18; ++y) {
            for (int x = 6; x < 18; ++x) {
                a(x, y) = inner(x, y);
            }
        }
        BinaryMask b = a;
        const BinaryMask extra = oracle::random_mask(rng, 24, 24, 0.1);
        for (int y = 6; y < 18; ++y) {
            for (int x = 6; x < 18; ++x) {
                b(x, y) |= extra(x, y);
            }
        }
        EXPECT_TRUE(oracle::subset(a, dilate(a, se)));
        EXPECT_TRUE(oracle::subset(dilate(a, se), dilate(b, se)));
        EXPECT_EQ(dilate(oracle::translate(a, 3, -2), se), oracle::translate(dilate(a, se), 3, -2));
    }
}

TEST(RingMask, Examples)
{
    BinaryMask dot(5, 5);
    dot(2, 2) = 1;
    const BinaryMask ring = ring_mask(dot, StructuringElement::square(1));
    EXPECT_EQ(count_foreground(ring), 8u);
    EXPECT_EQ(ring(2, 2), 0);
    EXPECT_EQ(count_foreground(ring_mask(BinaryMask(5, 5))), 0u);
}

TEST(RingMask, DisjointFromInputAndClipped)
{
    BinaryMask corner(6, 6);
    corner(0, 0) = 1;
    corner(1, 0) = 1;
    const BinaryMask ring = ring_mask(corner, StructuringElement::square(1));
    EXPECT_EQ(count_foreground(ring), 4u);
    EXPECT_EQ(count_foreground(mask_intersection(ring, corner)), 0u);
}

TEST(StructuringElement, Validate)
{
    EXPECT_THROW(StructuringElement::square(0).validate(), std::invalid_argument);
    EXPECT_EQ(StructuringElement::square(1).offsets().size(), 9u);
    EXPECT_EQ(StructuringElement::disc(1).offsets().size(), 5u);
}

TEST(SeparateOverlap, IsolatedDiscUnchanged)
{
    const BinaryMask m = disc(40, 40, 20, 20, 8);
    GrayImage hp(40, 40);
    for (std::size_t i = 0; i < m.size(); ++i) {
        hp.values()[i] = m.values()[i] ? 220.0 : 0.0;
    }
    const auto parts = separate_overlap(region_from_mask(m), hp);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0], m);
}

TEST(SeparateOverlap, FigureEightWithValley)
{
    const BinaryMask a = disc(60, 40, 22, 20, 9);
    const BinaryMask b = disc(60, 40, 38, 20, 9);
    BinaryMask both(60, 40);
    GrayImage hp(60, 40);
    for (int y = 0; y < 40; ++y) {
        for (int x = 0; x < 60; ++x) {
            if (a(x, y) || b(x, y)) {
                both(x, y) = 1;
                hp(x, y) = std::abs(x - 30) <= 1 ? 60.0 : 230.0;
            }
        }
    }
    OverlapParams params;
    params.min_fragment_area = 30;
    const auto parts = separate_overlap(region_from_mask(both), hp, params);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(count_foreground(mask_intersection(parts[0], parts[1])), 0u);
    const std::size_t covered = count_foreground(parts[0]) + count_foreground(parts[1]);
    EXPECT_GE(covered, count_foreground(both) * 9 / 10);
}

TEST(SeparateOverlap, OutputBoundedByDilation)
{
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> v(0.0, 255.0);
    for (int trial = 0; trial < 50; ++trial) {
        const BinaryMask m = disc(30, 30, 15, 15, 4 + trial % 8);
        GrayImage hp(30, 30);
        for (std::size_t i = 0; i < m.size(); ++i) {
            hp.values()[i] = m.values()[i] ? v(rng) : 0.0;
        }
        const auto parts = separate_overlap(region_from_mask(m), hp);
        ASSERT_GE(parts.size(), 1u);
        std::size_t total = 0;
        for (const auto& p : parts) {
            total += count_foreground(p);
        }
        EXPECT_LE(total, count_foreground(dilate(m)));
    }
}
