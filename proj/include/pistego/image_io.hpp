#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "pistego/image.hpp"

namespace pistego {

// Only Png and Bmp are accepted; the other tags exist so callers can name
// what they were handed and get UnsupportedFormat back.
enum class ImageFormat { Png, Bmp, Jpeg, Unknown };

const char* format_name(ImageFormat f) noexcept;

ImageFormat format_from_extension(const std::filesystem::path& path);
/// Identifies a stream by its magic bytes.
ImageFormat sniff_format(std::span<const std::uint8_t> bytes) noexcept;

/// Decodes an 8-bit-per-channel, 3-channel PNG or 24-bit uncompressed BMP.
/// Anything else (palette, grayscale, 16-bit, alpha, lossy) is rejected
/// with UnsupportedFormat; never converted.
RgbImage load_image(std::span<const std::uint8_t> bytes, ImageFormat format);
std::vector<std::uint8_t> save_image(const RgbImage& image, ImageFormat format);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// Format is taken from the extension.
RgbImage read_image(const std::filesystem::path& path);
void write_image(const std::filesystem::path& path, const RgbImage& image);

}  // namespace pistego
