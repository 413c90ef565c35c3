#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "wbc/membership.hpp"
#include "wbc/raster.hpp"
#include "wbc/regions.hpp"

namespace wbc {

enum class CellClass { Neutrophil, Lymphocyte, Monocyte, Eosinophil, Basophil, Unknown };

inline constexpr std::array<CellClass, 6> kAllCellClasses{CellClass::Neutrophil, CellClass::Lymphocyte,
                                                          CellClass::Monocyte,   CellClass::Eosinophil,
                                                          CellClass::Basophil,   CellClass::Unknown};

/// Lower-case name ("neutrophil", ..., "unknown").
std::string_view to_string(CellClass c);
/// Inverse of to_string; throws std::invalid_argument on an unknown name.
CellClass cell_class_from_string(std::string_view name);
/// Report/ground-truth count key, e.g. `no_of_monocyte`. The classic printout
/// spells one key `no_of_eosinophile`; it is normalized to `no_of_eosinophil`.
std::string count_key(CellClass c);

struct ShapeFeatures {
    /// max(bbox width, bbox height) / min(bbox width, bbox height), >= 1.
    double elongation = 1.0;
    /// Whether the rounded centroid falls on a nucleus pixel. Multi-lobed
    /// nuclei wrap around an empty centre and fail this test.
    bool centroid_inside = true;
};

struct ClassifyParams {
    double elongation_cut = 1.25;
    /// Cytoplasm with mean saturation below this reads as white.
    double sat_white_max = 0.2;
    /// Reads "very high saturation means white cytoplasm" literally: white is
    /// then ave_saturation > 1 - sat_white_max. Off by default because white
    /// has zero saturation under the HSI formula.
    bool literal_saturation_rule = false;
    /// Band sampled for cytoplasm colour.
    StructuringElement cytoplasm_se = StructuringElement::square(3);
    /// Nuclei smaller than this are reported as Unknown.
    int min_area = 1;
    MembershipDataSet red_set = default_red_set();
    MembershipDataSet blue_set = default_blue_set();

    void validate() const;
};

ShapeFeatures shape_features(const Region& region, const BinaryMask& mask);

BinaryMask cytoplasm_mask(const BinaryMask& nucleus, const StructuringElement& se);

struct CytoplasmStats {
    /// Saturation-weighted circular mean of hue, degrees in [0, 360).
    double ave_hue = 0.0;
    double ave_saturation = 0.0;
};

/// Colour statistics of the masked pixels. nullopt when the mask is empty.
std::optional<CytoplasmStats> cytoplasm_stats(const RgbImage& img, const BinaryMask& cmask);

/// White cytoplasm -> Neutrophil, red -> Eosinophil, blue -> Basophil.
CellClass classify_granulocyte(const CytoplasmStats& stats, const ClassifyParams& p);

/// Shape first: a centroid outside the nucleus means a multi-lobed
/// granulocyte decided by cytoplasm colour; otherwise elongated nuclei are
/// Monocytes and round ones Lymphocytes.
CellClass classify_cell(const BinaryMask& nucleus, const Region& region, const RgbImage& enhanced,
                        const ClassifyParams& p);

}  // namespace wbc
