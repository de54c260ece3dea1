#include "pistego/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "pistego/error.hpp"

namespace pistego {
namespace {

constexpr std::uint64_t kMaxPixels = std::uint64_t(1) << 30;

[[noreturn]] void unsupported(const std::string& what) {
  throw StegoError(ErrorKind::UnsupportedFormat, what);
}

[[noreturn]] void corrupt(const std::string& what) {
  throw StegoError(ErrorKind::DecodeError, what);
}

bool starts_with(std::span<const std::uint8_t> bytes, std::string_view magic) {
  return bytes.size() >= magic.size() &&
         std::equal(magic.begin(), magic.end(), bytes.begin(),
                    [](char m, std::uint8_t b) { return std::uint8_t(m) == b; });
}

// Recognisable image containers we refuse outright.
bool is_foreign_image(std::span<const std::uint8_t> bytes) {
  return starts_with(bytes, "GIF8") || starts_with(bytes, "II*\0") ||
         starts_with(bytes, "MM\0*") ||
         (starts_with(bytes, "RIFF") && bytes.size() >= 12 &&
          std::memcmp(bytes.data() + 8, "WEBP", 4) == 0);
}

// ---- PNG -----------------------------------------------------------------

struct PngMemSource {
  const std::uint8_t* data;
  std::size_t size;
  std::size_t pos;
};

struct PngErrorSink {
  char message[256] = {};
};

void png_on_error(png_structp png, png_const_charp msg) {
  auto* sink = static_cast<PngErrorSink*>(png_get_error_ptr(png));
  if (sink != nullptr) {
    std::snprintf(sink->message, sizeof(sink->message), "%s", msg);
  }
  png_longjmp(png, 1);
}

void png_on_warning(png_structp, png_const_charp) {}

void png_read_mem(png_structp png, png_bytep out, png_size_t length) {
  auto* src = static_cast<PngMemSource*>(png_get_io_ptr(png));
  if (length > src->size - src->pos) png_error(png, "unexpected end of PNG stream");
  std::memcpy(out, src->data + src->pos, length);
  src->pos += length;
}

void png_write_mem(png_structp png, png_bytep in, png_size_t length) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), in, in + length);
}

void png_flush_mem(png_structp) {}

struct PngReadGuard {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReadGuard() { png_destroy_read_struct(&png, info ? &info : nullptr, nullptr); }
};

struct PngWriteGuard {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriteGuard() { png_destroy_write_struct(&png, info ? &info : nullptr); }
};

RgbImage decode_png(std::span<const std::uint8_t> bytes) {
  PngErrorSink sink;
  PngMemSource src{bytes.data(), bytes.size(), 0};
  std::vector<std::uint8_t> rgb;
  std::vector<png_bytep> rows;
  PngReadGuard g;
  g.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &sink, png_on_error, png_on_warning);
  if (g.png == nullptr) corrupt("png: out of memory");
  g.info = png_create_info_struct(g.png);
  if (g.info == nullptr) corrupt("png: out of memory");

  if (setjmp(png_jmpbuf(g.png))) {
    corrupt(std::string("png: ") + sink.message);
  }

  png_set_read_fn(g.png, &src, png_read_mem);
  png_read_info(g.png, g.info);

  png_uint_32 width = 0, height = 0;
  int bit_depth = 0, color_type = 0, interlace = 0;
  png_get_IHDR(g.png, g.info, &width, &height, &bit_depth, &color_type, &interlace, nullptr,
               nullptr);
  if (color_type == PNG_COLOR_TYPE_PALETTE) unsupported("png: palette images are not supported");
  if ((color_type & PNG_COLOR_MASK_COLOR) == 0) unsupported("png: grayscale images are not supported");
  if ((color_type & PNG_COLOR_MASK_ALPHA) != 0 || png_get_valid(g.png, g.info, PNG_INFO_tRNS)) {
    unsupported("png: images with alpha or transparency are not supported");
  }
  if (bit_depth != 8) {
    unsupported("png: only 8 bits per channel is supported, got " + std::to_string(bit_depth));
  }
  if (std::uint64_t(width) * height > kMaxPixels) unsupported("png: image too large");

  png_set_interlace_handling(g.png);
  png_read_update_info(g.png, g.info);
  if (png_get_rowbytes(g.png, g.info) != std::size_t(width) * 3) corrupt("png: unexpected row size");

  rgb.resize(std::size_t(width) * height * 3);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = rgb.data() + std::size_t(y) * width * 3;
  png_read_image(g.png, rows.data());
  png_read_end(g.png, nullptr);

  return RgbImage::from_interleaved(width, height, rgb);
}

std::vector<std::uint8_t> encode_png(const RgbImage& image) {
  PngErrorSink sink;
  std::vector<std::uint8_t> out;
  std::vector<std::uint8_t> rgb = image.to_interleaved();
  std::vector<png_bytep> rows(image.height());
  PngWriteGuard g;
  if (image.width() == 0 || image.height() == 0) {
    throw StegoError(ErrorKind::EncodeError, "png: cannot encode an empty image");
  }
  g.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &sink, png_on_error, png_on_warning);
  if (g.png == nullptr) throw StegoError(ErrorKind::EncodeError, "png: out of memory");
  g.info = png_create_info_struct(g.png);
  if (g.info == nullptr) throw StegoError(ErrorKind::EncodeError, "png: out of memory");

  if (setjmp(png_jmpbuf(g.png))) {
    throw StegoError(ErrorKind::EncodeError, std::string("png: ") + sink.message);
  }

  png_set_write_fn(g.png, &out, png_write_mem, png_flush_mem);
  png_set_IHDR(g.png, g.info, png_uint_32(image.width()), png_uint_32(image.height()), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(g.png, g.info);
  for (std::size_t y = 0; y < image.height(); ++y) rows[y] = rgb.data() + y * image.width() * 3;
  png_write_image(g.png, rows.data());
  png_write_end(g.png, nullptr);
  return out;
}

// ---- BMP -----------------------------------------------------------------

std::uint16_t le16(std::span<const std::uint8_t> b, std::size_t at) {
  return std::uint16_t(b[at] | (b[at + 1] << 8));
}

std::uint32_t le32(std::span<const std::uint8_t> b, std::size_t at) {
  return std::uint32_t(b[at]) | (std::uint32_t(b[at + 1]) << 8) |
         (std::uint32_t(b[at + 2]) << 16) | (std::uint32_t(b[at + 3]) << 24);
}

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(std::uint8_t(v));
  out.push_back(std::uint8_t(v >> 8));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(std::uint8_t(v >> s));
}

constexpr std::size_t kBmpFileHeader = 14;

RgbImage decode_bmp(std::span<const std::uint8_t> b) {
  if (b.size() < kBmpFileHeader + 4 || !starts_with(b, "BM")) corrupt("bmp: bad signature");
  const std::uint32_t pixel_offset = le32(b, 10);
  const std::uint32_t info_size = le32(b, 14);
  if (info_size == 12) unsupported("bmp: OS/2 core headers are not supported");
  if (info_size < 40) corrupt("bmp: bad info header size");
  if (b.size() < kBmpFileHeader + info_size) corrupt("bmp: truncated header");

  const auto width = static_cast<std::int32_t>(le32(b, 18));
  const auto raw_height = static_cast<std::int32_t>(le32(b, 22));
  const std::uint16_t planes = le16(b, 26);
  const std::uint16_t bits = le16(b, 28);
  const std::uint32_t compression = le32(b, 30);

  if (planes != 1) corrupt("bmp: plane count must be 1");
  if (bits != 24) unsupported("bmp: only 24-bit images are supported, got " + std::to_string(bits));
  if (compression != 0) unsupported("bmp: compressed bitmaps are not supported");
  if (width <= 0 || raw_height == 0 || raw_height == INT32_MIN) corrupt("bmp: bad dimensions");

  const bool top_down = raw_height < 0;
  const std::size_t w = std::size_t(width);
  const std::size_t h = std::size_t(top_down ? -std::int64_t(raw_height) : raw_height);
  if (std::uint64_t(w) * h > kMaxPixels) unsupported("bmp: image too large");

  const std::size_t stride = (w * 3 + 3) & ~std::size_t(3);
  if (pixel_offset < kBmpFileHeader + info_size || pixel_offset > b.size() ||
      (b.size() - pixel_offset) / stride < h) {
    corrupt("bmp: pixel data truncated");
  }

  std::vector<std::uint8_t> rgb(w * h * 3);
  for (std::size_t y = 0; y < h; ++y) {
    const std::size_t src_row = top_down ? y : h - 1 - y;
    const std::uint8_t* src = b.data() + pixel_offset + src_row * stride;
    std::uint8_t* dst = rgb.data() + y * w * 3;
    for (std::size_t x = 0; x < w; ++x) {
      dst[3 * x] = src[3 * x + 2];
      dst[3 * x + 1] = src[3 * x + 1];
      dst[3 * x + 2] = src[3 * x];
    }
  }
  return RgbImage::from_interleaved(w, h, rgb);
}

std::vector<std::uint8_t> encode_bmp(const RgbImage& image) {
  const std::size_t w = image.width();
  const std::size_t h = image.height();
  if (w == 0 || h == 0) throw StegoError(ErrorKind::EncodeError, "bmp: cannot encode an empty image");
  const std::size_t stride = (w * 3 + 3) & ~std::size_t(3);
  const std::uint64_t data_size = std::uint64_t(stride) * h;
  if (data_size + 54 > UINT32_MAX || w > INT32_MAX || h > INT32_MAX) {
    throw StegoError(ErrorKind::EncodeError, "bmp: image too large");
  }

  std::vector<std::uint8_t> out;
  out.reserve(54 + data_size);
  out.push_back('B');
  out.push_back('M');
  put32(out, std::uint32_t(54 + data_size));
  put32(out, 0);
  put32(out, 54);
  put32(out, 40);
  put32(out, std::uint32_t(w));
  put32(out, std::uint32_t(h));  // positive: bottom-up rows
  put16(out, 1);
  put16(out, 24);
  put32(out, 0);
  put32(out, std::uint32_t(data_size));
  put32(out, 2835);  // 72 dpi
  put32(out, 2835);
  put32(out, 0);
  put32(out, 0);

  const auto r = image.red().pixels();
  const auto g = image.green().pixels();
  const auto bl = image.blue().pixels();
  for (std::size_t row = 0; row < h; ++row) {
    const std::size_t y = h - 1 - row;
    for (std::size_t x = 0; x < w; ++x) {
      const std::size_t i = y * w + x;
      out.push_back(bl[i]);
      out.push_back(g[i]);
      out.push_back(r[i]);
    }
    out.insert(out.end(), stride - w * 3, 0);
  }
  return out;
}

}  // namespace

const char* format_name(ImageFormat f) noexcept {
  switch (f) {
    case ImageFormat::Png: return "PNG";
    case ImageFormat::Bmp: return "BMP";
    case ImageFormat::Jpeg: return "JPEG";
    case ImageFormat::Unknown: break;
  }
  return "unknown";
}

ImageFormat format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  if (ext == ".png") return ImageFormat::Png;
  if (ext == ".bmp") return ImageFormat::Bmp;
  if (ext == ".jpg" || ext == ".jpeg" || ext == ".jpe" || ext == ".jfif") return ImageFormat::Jpeg;
  return ImageFormat::Unknown;
}

ImageFormat sniff_format(std::span<const std::uint8_t> bytes) noexcept {
  if (starts_with(bytes, "\x89PNG\r\n\x1a\n")) return ImageFormat::Png;
  if (starts_with(bytes, "BM")) return ImageFormat::Bmp;
  if (starts_with(bytes, "\xff\xd8\xff")) return ImageFormat::Jpeg;
  return ImageFormat::Unknown;
}

RgbImage load_image(std::span<const std::uint8_t> bytes, ImageFormat format) {
  if (format != ImageFormat::Png && format != ImageFormat::Bmp) {
    unsupported(std::string("unsupported image format: ") + format_name(format));
  }
  const ImageFormat actual = sniff_format(bytes);
  if (actual == ImageFormat::Jpeg || is_foreign_image(bytes)) {
    unsupported("stream is not a lossless PNG/BMP image");
  }
  if (actual != format) {
    corrupt(std::string("stream is not a valid ") + format_name(format) + " file");
  }
  return format == ImageFormat::Png ? decode_png(bytes) : decode_bmp(bytes);
}

std::vector<std::uint8_t> save_image(const RgbImage& image, ImageFormat format) {
  switch (format) {
    case ImageFormat::Png: return encode_png(image);
    case ImageFormat::Bmp: return encode_bmp(image);
    case ImageFormat::Jpeg:
    case ImageFormat::Unknown: break;
  }
  unsupported(std::string("cannot save as ") + format_name(format) + "; only PNG and BMP are lossless");
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StegoError(ErrorKind::Io, "cannot open " + path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw StegoError(ErrorKind::Io, "read failed: " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StegoError(ErrorKind::Io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!out) throw StegoError(ErrorKind::Io, "write failed: " + path.string());
}

RgbImage read_image(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return load_image(bytes, format_from_extension(path));
}

void write_image(const std::filesystem::path& path, const RgbImage& image) {
  const auto bytes = save_image(image, format_from_extension(path));
  write_file(path, bytes);
}

}  // namespace pistego
