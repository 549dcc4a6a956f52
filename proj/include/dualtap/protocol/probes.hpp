#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualtap/core/font.hpp"
#include "dualtap/core/types.hpp"

namespace dualtap::probes {

/// Layout and measurement contract for "normal task" questions.
///
/// The renderer places countable UI markers (buttons, list bullets) with
/// exact signature colors and sizes, keeps fixed bands for the status bar
/// and header, and leaves the side margins clean background. The toy
/// surrogate answers layout questions from differentiable statistics over
/// these conventions — soft color-mass counts and band color means — so a
/// correct answer really is read off the pixels.

inline constexpr int kStatusRows = 10;   // rows [0, 10): status bar
inline constexpr int kHeaderRow0 = 10;   // rows [10, 28): header band
inline constexpr int kHeaderRow1 = 28;
inline constexpr int kSideMargin = 6;    // clean background columns on both sides

inline constexpr int kButtonW = 20, kButtonH = 8;
inline constexpr int kBulletSize = 5;
inline const Rgb kButtonColor{0.36, 0.22, 0.86};
inline const Rgb kBulletColor{0.72, 0.18, 0.34};

/// Gaussian width of the color-match kernel used for mass counting.
inline constexpr Real kMassSigma = 0.10;
/// Gaussian width for scoring count words against the estimated count.
inline constexpr Real kCountSigma = 0.25;
/// Gaussian width for scoring palette colors against a band mean.
inline constexpr Real kColorSigma = 0.09;

struct PaletteColor {
  std::string name;
  Rgb rgb;
};
const std::vector<PaletteColor>& palette();
const PaletteColor& palette_entry(const std::string& name);

/// Palette subsets the renderer draws from.
const std::vector<std::string>& header_color_names();
const std::vector<std::string>& background_color_names();

const std::vector<std::string>& count_words();  // "zero" ... "nine"

/// All words the toy surrogate can emit as normal-task answers.
const std::vector<std::string>& answer_words();

enum class ProbeKind { button_count, item_count, header_color, background_color };

/// Keyword routing from a question to the statistic it asks about.
std::optional<ProbeKind> probe_for_question(const std::string& question);

/// PII field kinds (shared between the dataset and the glyph reader).
enum class PiiKind { name, phone, email, card_number, address, id_number };
inline constexpr int kNumPiiKinds = 6;

const std::string& pii_kind_name(PiiKind k);   // "name", "phone", ...
std::optional<PiiKind> pii_kind_from_name(const std::string& s);
const std::string& pii_kind_phrase(PiiKind k);  // "phone number", "street address", ...
int anchor_index(PiiKind k);

/// Routing for privacy questions: a specific field kind, or nullopt for the
/// generic "what personal information is visible" form.
std::optional<PiiKind> pii_kind_for_question(const std::string& question);
bool is_privacy_question(const std::string& question);

}  // namespace dualtap::probes
