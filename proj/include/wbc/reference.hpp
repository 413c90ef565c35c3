#pragma once

// Single-threaded reference versions of the data-parallel kernels. They are
// kept deliberately plain and are used by the tests (bit-for-bit agreement)
// and by the benchmark target.

#include "wbc/binarize.hpp"
#include "wbc/colorspace.hpp"
#include "wbc/enhance.hpp"
#include "wbc/raster.hpp"
#include "wbc/regions.hpp"

namespace wbc::reference {

GrayImage laplacian(const GrayImage& img, const LaplacianKernel& kernel);
RgbImage sharpen(const RgbImage& img, const LaplacianKernel& kernel);
HsiImage convert_image(const RgbImage& img);
GrayImage hue_highpass(const HsiImage& hsi, double cutoff, double s_min);
BinaryMask to_binary(const GrayImage& img, double t);
BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se);
RgbImage pixelwise_multiply(const RgbImage& img, const BinaryMask& mask);

}  // namespace wbc::reference
