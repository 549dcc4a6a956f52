#include "dualtap/core/png_io.hpp"

#include <png.h>

#include <cmath>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace dualtap {

namespace {

void png_error_fn(png_structp png, png_const_charp msg) {
  (void)png;
  throw std::runtime_error(std::string("libpng: ") + msg);
}

void png_warn_fn(png_structp, png_const_charp) {}

struct ByteSink {
  std::vector<unsigned char> bytes;
};

void sink_write(png_structp png, png_bytep data, png_size_t n) {
  auto* sink = static_cast<ByteSink*>(png_get_io_ptr(png));
  sink->bytes.insert(sink->bytes.end(), data, data + n);
}

void sink_flush(png_structp) {}

struct ByteSource {
  const unsigned char* data;
  std::size_t size;
  std::size_t pos;
};

void source_read(png_structp png, png_bytep out, png_size_t n) {
  auto* src = static_cast<ByteSource*>(png_get_io_ptr(png));
  if (src->pos + n > src->size) png_error(png, "unexpected end of PNG data");
  std::memcpy(out, src->data + src->pos, n);
  src->pos += n;
}

inline unsigned char to_u8(Real v) {
  Real s = std::lround(std::min(std::max(v, Real(0)), Real(1)) * 255.0);
  return (unsigned char)s;
}

}  // namespace

std::vector<unsigned char> encode_png_rgb8(const Tensor& img) {
  require(img.channels == 3, "encode_png_rgb8: need 3 channels");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_fn, png_warn_fn);
  if (!png) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  ByteSink sink;
  try {
    png_set_write_fn(png, &sink, sink_write, sink_flush);
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, png_uint_32(img.width), png_uint_32(img.height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<unsigned char> row(std::size_t(img.width) * 3);
    for (int y = 0; y < img.height; ++y) {
      for (int x = 0; x < img.width; ++x) {
        row[std::size_t(x) * 3 + 0] = to_u8(img.at(0, y, x));
        row[std::size_t(x) * 3 + 1] = to_u8(img.at(1, y, x));
        row[std::size_t(x) * 3 + 2] = to_u8(img.at(2, y, x));
      }
      png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
  } catch (...) {
    png_destroy_write_struct(&png, &info);
    throw;
  }
  png_destroy_write_struct(&png, &info);
  return std::move(sink.bytes);
}

void write_png_rgb8(const std::string& path, const Tensor& img) {
  auto bytes = encode_png_rgb8(img);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

Tensor decode_png_rgb(const std::vector<unsigned char>& bytes) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_fn, png_warn_fn);
  if (!png) throw std::runtime_error("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  Tensor out;
  try {
    ByteSource src{bytes.data(), bytes.size(), 0};
    png_set_read_fn(png, &src, source_read);
    png_read_info(png, info);

    png_uint_32 w = png_get_image_width(png, info);
    png_uint_32 h = png_get_image_height(png, info);
    // normalize everything to 8-bit RGB
    png_set_expand(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
    png_read_update_info(png, info);
    if (png_get_channels(png, info) != 3) throw std::runtime_error("PNG decode: not RGB after transforms");

    out = Tensor(3, int(h), int(w));
    std::vector<unsigned char> row(std::size_t(w) * 3);
    for (png_uint_32 y = 0; y < h; ++y) {
      png_read_row(png, row.data(), nullptr);
      for (png_uint_32 x = 0; x < w; ++x) {
        out.at(0, int(y), int(x)) = Real(row[std::size_t(x) * 3 + 0]) / 255.0;
        out.at(1, int(y), int(x)) = Real(row[std::size_t(x) * 3 + 1]) / 255.0;
        out.at(2, int(y), int(x)) = Real(row[std::size_t(x) * 3 + 2]) / 255.0;
      }
    }
    png_read_end(png, nullptr);
  } catch (...) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw;
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

Tensor read_png_rgb(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open image: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)),
                                   std::istreambuf_iterator<char>());
  return decode_png_rgb(bytes);
}

void write_png_gray16(const std::string& path, const Tensor& map, Real scale_max) {
  require(map.channels == 1, "write_png_gray16: need 1 channel");
  Real mx = scale_max > 0 ? scale_max : map.d.maxCoeff();
  Real scale = mx > 1e-12 ? 65535.0 / mx : 0.0;

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_fn, png_warn_fn);
  if (!png) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  ByteSink sink;
  try {
    png_set_write_fn(png, &sink, sink_write, sink_flush);
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, png_uint_32(map.width), png_uint_32(map.height), 16,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<unsigned char> row(std::size_t(map.width) * 2);
    for (int y = 0; y < map.height; ++y) {
      for (int x = 0; x < map.width; ++x) {
        Real v = std::min(std::max(map.at(0, y, x) * scale, Real(0)), Real(65535));
        auto q = (unsigned int)std::lround(v);
        row[std::size_t(x) * 2 + 0] = (unsigned char)(q >> 8);  // PNG is big-endian
        row[std::size_t(x) * 2 + 1] = (unsigned char)(q & 0xff);
      }
      png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
  } catch (...) {
    png_destroy_write_struct(&png, &info);
    throw;
  }
  png_destroy_write_struct(&png, &info);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write(reinterpret_cast<const char*>(sink.bytes.data()), std::streamsize(sink.bytes.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace dualtap
