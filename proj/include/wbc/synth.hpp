#pragma once

// Deterministic synthetic blood-smear fields with exact ground truth.
//
// Rendering is hard-edged (no anti-aliasing) so the ground truth is exact.
// Palette rules the generator relies on:
//  * nuclei are a purple-blue (hue ~256, saturation ~0.55);
//  * every reddish colour (plasma, red cells, eosinophil cytoplasm) shares the
//    same green-minus-blue offset, so sharpening never pushes a reddish pixel
//    across the 0/360 hue seam;
//  * noise is one uniform offset per pixel added to all three channels, which
//    leaves hue untouched away from clipping.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbc/classify.hpp"
#include "wbc/raster.hpp"

namespace wbc {

struct CellSpec {
    CellClass cls = CellClass::Lymphocyte;
    Point center;
    int nucleus_radius = 10;
    /// Quarter turns: gap direction of a horseshoe, long axis of an oval.
    int orientation = 0;
    /// Index of a cell whose nucleus touches this one. The pair is rendered
    /// with a dim, unsaturated seam along the contact line.
    std::optional<int> overlap_partner;
};

struct BackgroundSpec {
    int rbc_count = 24;
    int rbc_radius_min = 11;
    int rbc_radius_max = 15;
    /// Amplitude of the per-pixel uniform offset, gray levels.
    int noise_amplitude = 6;
};

struct FieldSpec {
    int width = 256;
    int height = 256;
    std::vector<CellSpec> cells;
    BackgroundSpec background;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument when the layout is infeasible: cells out
    /// of bounds, unrelated cells colliding, or partners not touching.
    void validate() const;
};

struct GroundTruth {
    std::array<int, kAllCellClasses.size()> counts{};
    std::vector<BBox> boxes;

    int count(CellClass c) const { return counts[static_cast<std::size_t>(c)]; }
    int total() const;
    bool operator==(const GroundTruth&) const = default;
};

struct SyntheticField {
    RgbImage image;
    GroundTruth truth;
    /// Pixels painted with nucleus stain (contact seams excluded).
    BinaryMask nuclei;
};

SyntheticField generate(const FieldSpec& spec);

/// Proportions for Neutrophil, Lymphocyte, Monocyte, Eosinophil, Basophil.
using ClassMix = std::array<double, 5>;

/// Midpoints of the normal adult differential (N 50-70, L 25-35, M 4-6,
/// E 1-3, B 0.4-1 percent), normalised to sum to one.
ClassMix default_mix();

struct SuiteOptions {
    int width = 256;
    int height = 256;
    int min_cells = 2;
    int max_cells = 5;
    /// Chance that a placed cell gets a touching partner (counts towards
    /// the field's cells).
    double pair_probability = 0.1;
    BackgroundSpec background;
};

/// Lays out `n` random fields with classes drawn from `mix`. Field i uses a
/// seed derived from (seed, i), so fields can be built in parallel.
std::vector<FieldSpec> suite_specs(int n, const ClassMix& mix, std::uint64_t seed, const SuiteOptions& options = {});
std::vector<SyntheticField> generate_suite(int n, const ClassMix& mix, std::uint64_t seed,
                                           const SuiteOptions& options = {});

/// Two neutrophils, an eosinophil, a monocyte and a lymphocyte.
FieldSpec five_cell_field_spec();
/// One neutrophil and one monocyte.
FieldSpec two_cell_field_spec();

nlohmann::ordered_json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const GroundTruth& truth);
GroundTruth ground_truth_from_json(const nlohmann::ordered_json& j);

}  // namespace wbc
