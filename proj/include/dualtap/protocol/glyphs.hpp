#pragma once

#include <string>
#include <vector>

#include "dualtap/core/types.hpp"

namespace dualtap::glyphs {

/// Machine-readable glyph strips.
///
/// Sensitive field values are rendered twice in a screenshot: once as normal
/// UI text, and once as a compact dot-matrix strip of fixed-size glyph cells
/// that the toy surrogate can read back through smooth template correlation.
/// A strip starts with a per-field-kind anchor cell followed by one cell per
/// character. These constants and the template bank are the contract between
/// the renderer and the reader; change them together or not at all.

inline constexpr int kCell = 6;           // glyph cell side in pixels
inline constexpr int kLatticeStride = 2;  // strips start on this pixel lattice
inline constexpr Real kInk = 0.15;        // luminance of set dots
inline constexpr Real kPaper = 0.97;      // luminance of clear dots

/// Characters that can appear in a strip, in vocabulary order.
const std::string& alphabet();  // "0..9a..z-.@/ "

inline constexpr int kNumAnchors = 6;  // one per PII kind

/// Zero-mean, unit-norm cell template for alphabet index `i` (row-major
/// kCell*kCell doubles). Patterns are procedurally derived from a fixed seed
/// with a minimum pairwise Hamming distance, so correlations between distinct
/// glyphs stay far below the self-match of 1.
const VectorR& char_template(int i);
const VectorR& anchor_template(int kind_index);

/// Raw 0/1 dot pattern used by the renderer (same indexing as the templates).
const std::vector<unsigned char>& char_dots(int i);
const std::vector<unsigned char>& anchor_dots(int kind_index);

int char_index(char c);  // -1 if not in the alphabet

/// Pixel width of a rendered strip for a value of `n` characters.
inline int strip_width(int n) { return (n + 1) * kCell; }
inline int strip_height() { return kCell; }

}  // namespace dualtap::glyphs
