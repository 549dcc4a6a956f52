#pragma once

#include <string>
#include <vector>

#include "dualtap/core/types.hpp"

namespace dualtap {

/// Encode a 3-channel [0,1] tensor as 8-bit RGB PNG bytes. Values are
/// rounded to the nearest 8-bit level; encoder settings are fixed so equal
/// inputs give byte-identical files.
std::vector<unsigned char> encode_png_rgb8(const Tensor& img);
void write_png_rgb8(const std::string& path, const Tensor& img);

/// Decode an RGB/RGBA/gray PNG into a 3-channel [0,1] tensor.
Tensor read_png_rgb(const std::string& path);
Tensor decode_png_rgb(const std::vector<unsigned char>& bytes);

/// Write a single-channel map as 16-bit grayscale PNG, scaled so the map's
/// max (or `scale_max` if positive) maps to 65535. All-zero maps stay zero.
void write_png_gray16(const std::string& path, const Tensor& map, Real scale_max = -1.0);

}  // namespace dualtap
