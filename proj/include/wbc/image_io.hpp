#pragma once

#include <filesystem>
#include <stdexcept>

#include "wbc/raster.hpp"

namespace wbc {

/// A file could not be read or decoded. The message carries the path.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads 8-bit RGB(A) PNG or uncompressed 24/32-bit BMP, chosen by the
/// file signature. Alpha is dropped.
RgbImage read_image(const std::filesystem::path& path);

/// Channel values are rounded and clamped to [0, 255].
void write_png(const std::filesystem::path& path, const RgbImage& img);
void write_bmp(const std::filesystem::path& path, const RgbImage& img);

}  // namespace wbc
