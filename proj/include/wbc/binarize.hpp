#pragma once

#include "wbc/colorspace.hpp"
#include "wbc/raster.hpp"

namespace wbc {

struct ThresholdParams {
    /// Convergence tolerance in gray levels.
    double t0 = 0.5;
    int max_iters = 100;

    void validate() const;
};

/// Keeps pixels whose hue is at or above `cutoff` and whose saturation is at
/// least `s_min`; everything else becomes 0. Kept hues are mapped linearly
/// from [cutoff, max kept hue] onto [0, 255], so the order of hues survives
/// and the brightest kept hue reads 255.
GrayImage hue_highpass(const HsiImage& hsi, double cutoff, double s_min = 0.15);

/// Iterative isodata threshold. Starts from the mean gray level and repeats
/// T <- (mean(> T) + mean(<= T)) / 2 until |dT| < t0 or max_iters is reached.
/// An empty class takes the current T as its mean.
double isodata_threshold(const GrayImage& img, const ThresholdParams& params = {});

/// Foreground is strictly greater than t.
BinaryMask to_binary(const GrayImage& img, double t);

}  // namespace wbc
