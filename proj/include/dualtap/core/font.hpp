#pragma once

#include <array>
#include <string>

#include "dualtap/core/types.hpp"

namespace dualtap {

struct Rgb {
  Real r = 0, g = 0, b = 0;
};

/// Fixed 5x7 bitmap font (lowercase, digits, a few symbols). Uppercase input
/// is folded to lowercase. Glyph advance is 6*scale pixels.
const std::array<unsigned char, 7>* font_glyph(char c);

int text_width(const std::string& s, int scale = 1);
constexpr int font_height(int scale = 1) { return 7 * scale; }

void draw_text(Tensor& img, int x, int y, const std::string& s, const Rgb& color, int scale = 1);
void fill_rect(Tensor& img, int x, int y, int w, int h, const Rgb& color);

}  // namespace dualtap
