#pragma once
// Independent reference answers for the property tests. Deliberately naive:
// none of these share code with the library kernels they check.

#include <cstdint>
#include <random>
#include <vector>

#include "wbc/raster.hpp"
#include "wbc/regions.hpp"

namespace oracle {

/// Fixed points of the isodata map T -> (mean(> T) + mean(<= T)) / 2 on a
/// finite value set, found by trying every split of the sorted values.
std::vector<double> isodata_fixed_points(const std::vector<double>& values);

/// The fixed point an iteration started at the mean must reach: the map is
/// non-decreasing, so the sequence moves monotonically towards the nearest
/// fixed point on the side it first steps to.
double isodata_expected(const std::vector<double>& values);

/// Breadth-first flood fill. Labels are arbitrary but consistent.
wbc::Plane<std::int32_t> flood_fill_labels(const wbc::BinaryMask& mask, wbc::Connectivity connectivity);

/// Two label images describe the same partition of the foreground.
bool same_partition(const wbc::Plane<std::int32_t>& a, const wbc::Plane<std::int32_t>& b);

/// Dilation straight from the definition: a pixel is set when some
/// foreground pixel lies within the element centred on it.
wbc::BinaryMask dilate_by_definition(const wbc::BinaryMask& mask, const wbc::StructuringElement& se);

wbc::BinaryMask random_mask(std::mt19937_64& rng, int width, int height, double density);

/// Mask shifted by (dx, dy); pixels leaving the frame are dropped.
wbc::BinaryMask translate(const wbc::BinaryMask& mask, int dx, int dy);

bool subset(const wbc::BinaryMask& a, const wbc::BinaryMask& b);

}  // namespace oracle
