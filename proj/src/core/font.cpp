#include "dualtap/core/font.hpp"

#include <cctype>

namespace dualtap {

namespace {

struct Glyph {
  char c;
  std::array<unsigned char, 7> rows;  // 5 bits per row, MSB = leftmost column
};

// clang-format off
const Glyph kGlyphs[] = {
  {' ', {0b00000,0b00000,0b00000,0b00000,0b00000,0b00000,0b00000}},
  {'0', {0b01110,0b10001,0b10011,0b10101,0b11001,0b10001,0b01110}},
  {'1', {0b00100,0b01100,0b00100,0b00100,0b00100,0b00100,0b01110}},
  {'2', {0b01110,0b10001,0b00001,0b00010,0b00100,0b01000,0b11111}},
  {'3', {0b11111,0b00010,0b00100,0b00010,0b00001,0b10001,0b01110}},
  {'4', {0b00010,0b00110,0b01010,0b10010,0b11111,0b00010,0b00010}},
  {'5', {0b11111,0b10000,0b11110,0b00001,0b00001,0b10001,0b01110}},
  {'6', {0b00110,0b01000,0b10000,0b11110,0b10001,0b10001,0b01110}},
  {'7', {0b11111,0b00001,0b00010,0b00100,0b01000,0b01000,0b01000}},
  {'8', {0b01110,0b10001,0b10001,0b01110,0b10001,0b10001,0b01110}},
  {'9', {0b01110,0b10001,0b10001,0b01111,0b00001,0b00010,0b01100}},
  {'a', {0b00000,0b00000,0b01110,0b00001,0b01111,0b10001,0b01111}},
  {'b', {0b10000,0b10000,0b10110,0b11001,0b10001,0b10001,0b11110}},
  {'c', {0b00000,0b00000,0b01110,0b10000,0b10000,0b10001,0b01110}},
  {'d', {0b00001,0b00001,0b01101,0b10011,0b10001,0b10001,0b01111}},
  {'e', {0b00000,0b00000,0b01110,0b10001,0b11111,0b10000,0b01110}},
  {'f', {0b00110,0b01001,0b01000,0b11100,0b01000,0b01000,0b01000}},
  {'g', {0b00000,0b01111,0b10001,0b10001,0b01111,0b00001,0b01110}},
  {'h', {0b10000,0b10000,0b10110,0b11001,0b10001,0b10001,0b10001}},
  {'i', {0b00100,0b00000,0b01100,0b00100,0b00100,0b00100,0b01110}},
  {'j', {0b00010,0b00000,0b00110,0b00010,0b00010,0b10010,0b01100}},
  {'k', {0b10000,0b10000,0b10010,0b10100,0b11000,0b10100,0b10010}},
  {'l', {0b01100,0b00100,0b00100,0b00100,0b00100,0b00100,0b01110}},
  {'m', {0b00000,0b00000,0b11010,0b10101,0b10101,0b10101,0b10101}},
  {'n', {0b00000,0b00000,0b10110,0b11001,0b10001,0b10001,0b10001}},
  {'o', {0b00000,0b00000,0b01110,0b10001,0b10001,0b10001,0b01110}},
  {'p', {0b00000,0b00000,0b11110,0b10001,0b11110,0b10000,0b10000}},
  {'q', {0b00000,0b00000,0b01101,0b10011,0b01111,0b00001,0b00001}},
  {'r', {0b00000,0b00000,0b10110,0b11001,0b10000,0b10000,0b10000}},
  {'s', {0b00000,0b00000,0b01110,0b10000,0b01110,0b00001,0b11110}},
  {'t', {0b01000,0b01000,0b11100,0b01000,0b01000,0b01001,0b00110}},
  {'u', {0b00000,0b00000,0b10001,0b10001,0b10001,0b10011,0b01101}},
  {'v', {0b00000,0b00000,0b10001,0b10001,0b10001,0b01010,0b00100}},
  {'w', {0b00000,0b00000,0b10001,0b10101,0b10101,0b10101,0b01010}},
  {'x', {0b00000,0b00000,0b10001,0b01010,0b00100,0b01010,0b10001}},
  {'y', {0b00000,0b00000,0b10001,0b10001,0b01111,0b00001,0b01110}},
  {'z', {0b00000,0b00000,0b11111,0b00010,0b00100,0b01000,0b11111}},
  {':', {0b00000,0b00100,0b00000,0b00000,0b00100,0b00000,0b00000}},
  {'-', {0b00000,0b00000,0b00000,0b01110,0b00000,0b00000,0b00000}},
  {'.', {0b00000,0b00000,0b00000,0b00000,0b00000,0b00110,0b00110}},
  {',', {0b00000,0b00000,0b00000,0b00000,0b00110,0b00100,0b01000}},
  {'@', {0b01110,0b10001,0b10111,0b10101,0b10111,0b10000,0b01110}},
  {'/', {0b00001,0b00010,0b00100,0b00100,0b00100,0b01000,0b10000}},
  {'%', {0b11001,0b11010,0b00010,0b00100,0b01000,0b01011,0b10011}},
  {'#', {0b01010,0b01010,0b11111,0b01010,0b11111,0b01010,0b01010}},
  {'+', {0b00000,0b00100,0b00100,0b11111,0b00100,0b00100,0b00000}},
  {'=', {0b00000,0b00000,0b11111,0b00000,0b11111,0b00000,0b00000}},
  {'?', {0b01110,0b10001,0b00010,0b00100,0b00100,0b00000,0b00100}},
  {'(', {0b00010,0b00100,0b01000,0b01000,0b01000,0b00100,0b00010}},
  {')', {0b01000,0b00100,0b00010,0b00010,0b00010,0b00100,0b01000}},
};
// clang-format on

}  // namespace

const std::array<unsigned char, 7>* font_glyph(char c) {
  char lc = char(std::tolower((unsigned char)c));
  for (const auto& g : kGlyphs)
    if (g.c == lc) return &g.rows;
  return nullptr;
}

int text_width(const std::string& s, int scale) { return int(s.size()) * 6 * scale; }

void fill_rect(Tensor& img, int x, int y, int w, int h, const Rgb& color) {
  int x0 = std::max(0, x), y0 = std::max(0, y);
  int x1 = std::min(img.width, x + w), y1 = std::min(img.height, y + h);
  for (int yy = y0; yy < y1; ++yy)
    for (int xx = x0; xx < x1; ++xx) {
      img.at(0, yy, xx) = color.r;
      img.at(1, yy, xx) = color.g;
      img.at(2, yy, xx) = color.b;
    }
}

void draw_text(Tensor& img, int x, int y, const std::string& s, const Rgb& color, int scale) {
  int cx = x;
  for (char c : s) {
    const auto* rows = font_glyph(c);
    if (rows) {
      for (int r = 0; r < 7; ++r) {
        unsigned char bits = (*rows)[std::size_t(r)];
        for (int col = 0; col < 5; ++col) {
          if (bits & (1 << (4 - col)))
            fill_rect(img, cx + col * scale, y + r * scale, scale, scale, color);
        }
      }
    }
    cx += 6 * scale;
  }
}

}  // namespace dualtap
