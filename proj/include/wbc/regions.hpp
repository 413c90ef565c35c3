#pragma once

#include <vector>

#include "wbc/binarize.hpp"
#include "wbc/raster.hpp"

namespace wbc {

enum class Connectivity { Four = 4, Eight = 8 };

struct StructuringElement {
    enum class Shape { Square, Disc };

    Shape shape = Shape::Square;
    int radius = 1;

    static StructuringElement square(int radius) { return {Shape::Square, radius}; }
    static StructuringElement disc(int radius) { return {Shape::Disc, radius}; }

    void validate() const;
    /// Offsets (dx, dy) covered by the element, centre included.
    std::vector<Point> offsets() const;
};

struct ValidityParams {
    double factor = 0.85;
    int min_area = 30;

    void validate() const;
};

/// Connected components. Labels run 1..count in raster order of each
/// component's first pixel.
LabelMatrix label(const BinaryMask& mask, Connectivity connectivity = Connectivity::Eight);

/// Maximum highpass value inside each label, index 0 unused. One entry is
/// produced per label; the scan is a single pass over the image.
std::vector<double> label_maxima(const LabelMatrix& labels, const GrayImage& highpass);

/// Labels whose in-contour highpass maximum exceeds factor times the maximum
/// over all labeled pixels, and whose area reaches min_area. Ties at exactly
/// factor times the maximum are rejected. Returned in increasing label order.
std::vector<int> valid_contours(const LabelMatrix& labels, const GrayImage& highpass, const ValidityParams& p = {});

/// Pixels whose structuring-element neighbourhood touches the foreground.
/// The neighbourhood is clipped to the image.
BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se = {});

/// dilate(mask) minus mask: the band just outside the foreground.
BinaryMask ring_mask(const BinaryMask& mask, const StructuringElement& se = {});

struct OverlapParams {
    StructuringElement se;
    ThresholdParams threshold;
    Connectivity connectivity = Connectivity::Eight;
    /// Fragments smaller than this after re-thresholding are discarded.
    int min_fragment_area = 1;
};

/// Splits a contour that may hold several touching nuclei.
///
/// The band just outside the contour gives a fill level (its mean highpass
/// value). A scratch image holds that level everywhere except on the contour,
/// which keeps its highpass values; the scratch image is re-thresholded with
/// the isodata rule and re-labeled. Every component inside the contour that
/// is large enough becomes one output mask. With fewer than two such
/// components the original contour mask is returned as the only element.
std::vector<BinaryMask> separate_overlap(const Region& contour, const GrayImage& highpass,
                                         const OverlapParams& params = {});

}  // namespace wbc
