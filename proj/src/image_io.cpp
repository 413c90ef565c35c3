#include "wbc/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

namespace wbc {

namespace {

std::uint8_t quantize(double v)
{
    return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

std::vector<std::uint8_t> slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path.string() + ": cannot open file");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t le32(const std::uint8_t* p)
{
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t le16(const std::uint8_t* p)
{
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

void put16(std::vector<std::uint8_t>& out, std::uint16_t v)
{
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

RgbImage decode_png(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes)
{
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
        throw InputError(path.string() + ": " + image.message);
    }
    image.format = PNG_FORMAT_RGB;
    if (image.width == 0 || image.height == 0) {
        png_image_free(&image);
        throw InputError(path.string() + ": empty image");
    }
    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw InputError(path.string() + ": " + msg);
    }
    const int w = static_cast<int>(image.width);
    const int h = static_cast<int>(image.height);
    RgbImage out(w, h);
    for (int y = 0; y < h; ++y) {
        const std::uint8_t* row = buffer.data() + static_cast<std::size_t>(y) * w * 3;
        for (int x = 0; x < w; ++x) {
            out.set(x, y, row[3 * x], row[3 * x + 1], row[3 * x + 2]);
        }
    }
    return out;
}

RgbImage decode_bmp(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes)
{
    const auto fail = [&](const std::string& why) { return InputError(path.string() + ": " + why); };
    if (bytes.size() < 54) {
        throw fail("truncated BMP header");
    }
    const std::uint32_t pixel_offset = le32(&bytes[10]);
    const std::uint32_t header_size = le32(&bytes[14]);
    if (header_size < 40) {
        throw fail("unsupported BMP header (need BITMAPINFOHEADER or later)");
    }
    const auto raw_width = static_cast<std::int32_t>(le32(&bytes[18]));
    const auto raw_height = static_cast<std::int32_t>(le32(&bytes[22]));
    const std::uint16_t bpp = le16(&bytes[28]);
    const std::uint32_t compression = le32(&bytes[30]);
    if (bpp != 24 && bpp != 32) {
        throw fail("only 24- and 32-bit BMP are supported");
    }
    // BI_RGB, or BI_BITFIELDS with the usual BGRA masks for 32-bit files.
    if (compression != 0 && !(compression == 3 && bpp == 32)) {
        throw fail("compressed BMP is not supported");
    }
    if (raw_width <= 0 || raw_height == 0 || raw_height == INT32_MIN) {
        throw fail("invalid BMP dimensions");
    }
    const bool top_down = raw_height < 0;
    const int w = raw_width;
    const int h = top_down ? -raw_height : raw_height;
    const std::size_t bytes_per_pixel = bpp / 8;
    const std::size_t stride = (static_cast<std::size_t>(w) * bytes_per_pixel + 3) & ~std::size_t{3};
    if (pixel_offset > bytes.size() || stride * static_cast<std::size_t>(h) > bytes.size() - pixel_offset) {
        throw fail("truncated BMP pixel data");
    }
    RgbImage out(w, h);
    for (int y = 0; y < h; ++y) {
        const int src_row = top_down ? y : h - 1 - y;
        const std::uint8_t* row = bytes.data() + pixel_offset + stride * static_cast<std::size_t>(src_row);
        for (int x = 0; x < w; ++x) {
            const std::uint8_t* px = row + bytes_per_pixel * static_cast<std::size_t>(x);
            out.set(x, y, px[2], px[1], px[0]);
        }
    }
    return out;
}

}  // namespace

RgbImage read_image(const std::filesystem::path& path)
{
    const auto bytes = slurp(path);
    static constexpr std::array<std::uint8_t, 8> png_sig{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (bytes.size() >= png_sig.size() && std::equal(png_sig.begin(), png_sig.end(), bytes.begin())) {
        return decode_png(path, bytes);
    }
    if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') {
        return decode_bmp(path, bytes);
    }
    throw InputError(path.string() + ": unrecognized image format");
}

void write_png(const std::filesystem::path& path, const RgbImage& img)
{
    const int w = img.width();
    const int h = img.height();
    std::vector<std::uint8_t> buffer(static_cast<std::size_t>(w) * h * 3);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            auto* px = buffer.data() + (static_cast<std::size_t>(y) * w + x) * 3;
            px[0] = quantize(img.r(x, y));
            px[1] = quantize(img.g(x, y));
            px[2] = quantize(img.b(x, y));
        }
    }
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(w);
    image.height = static_cast<png_uint_32>(h);
    image.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&image, path.string().c_str(), 0, buffer.data(), 0, nullptr)) {
        throw std::runtime_error(path.string() + ": " + image.message);
    }
}

void write_bmp(const std::filesystem::path& path, const RgbImage& img)
{
    const int w = img.width();
    const int h = img.height();
    const std::size_t stride = (static_cast<std::size_t>(w) * 3 + 3) & ~std::size_t{3};
    const auto data_size = static_cast<std::uint32_t>(stride * h);
    std::vector<std::uint8_t> out;
    out.reserve(54 + data_size);
    out.push_back('B');
    out.push_back('M');
    put32(out, 54 + data_size);
    put32(out, 0);
    put32(out, 54);
    put32(out, 40);
    put32(out, static_cast<std::uint32_t>(w));
    put32(out, static_cast<std::uint32_t>(h));
    put16(out, 1);
    put16(out, 24);
    put32(out, 0);
    put32(out, data_size);
    put32(out, 2835);
    put32(out, 2835);
    put32(out, 0);
    put32(out, 0);
    for (int y = h - 1; y >= 0; --y) {
        std::size_t written = 0;
        for (int x = 0; x < w; ++x) {
            out.push_back(quantize(img.b(x, y)));
            out.push_back(quantize(img.g(x, y)));
            out.push_back(quantize(img.r(x, y)));
            written += 3;
        }
        for (; written < stride; ++written) {
            out.push_back(0);
        }
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error(path.string() + ": cannot open for writing");
    }
    file.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
}

}  // namespace wbc
