#include "dualtap/protocol/probes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dualtap::probes {

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  return out;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

const std::vector<PaletteColor>& palette() {
  static const std::vector<PaletteColor> p = {
      {"red", {0.85, 0.15, 0.15}},   {"green", {0.13, 0.62, 0.25}},
      {"blue", {0.16, 0.34, 0.82}},  {"orange", {0.93, 0.55, 0.12}},
      {"teal", {0.10, 0.62, 0.62}},  {"gray", {0.78, 0.78, 0.80}},
      {"white", {0.97, 0.97, 0.97}},
  };
  return p;
}

const PaletteColor& palette_entry(const std::string& name) {
  for (const auto& c : palette())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown palette color: " + name);
}

const std::vector<std::string>& header_color_names() {
  static const std::vector<std::string> v = {"red", "green", "blue", "orange", "teal"};
  return v;
}

const std::vector<std::string>& background_color_names() {
  static const std::vector<std::string> v = {"white", "gray"};
  return v;
}

const std::vector<std::string>& count_words() {
  static const std::vector<std::string> v = {"zero", "one", "two",   "three", "four",
                                             "five", "six", "seven", "eight", "nine"};
  return v;
}

const std::vector<std::string>& answer_words() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> w = count_words();
    for (const auto& c : palette()) w.push_back(c.name);
    return w;
  }();
  return v;
}

std::optional<ProbeKind> probe_for_question(const std::string& question) {
  std::string q = lower(question);
  if (contains(q, "button")) return ProbeKind::button_count;
  if (contains(q, "item") || contains(q, "list")) return ProbeKind::item_count;
  if (contains(q, "header") || contains(q, "top bar")) return ProbeKind::header_color;
  if (contains(q, "background")) return ProbeKind::background_color;
  return std::nullopt;
}

const std::string& pii_kind_name(PiiKind k) {
  static const std::vector<std::string> names = {"name",        "phone",   "email",
                                                 "card_number", "address", "id_number"};
  return names.at(std::size_t(k));
}

std::optional<PiiKind> pii_kind_from_name(const std::string& s) {
  for (int i = 0; i < kNumPiiKinds; ++i)
    if (pii_kind_name(PiiKind(i)) == s) return PiiKind(i);
  return std::nullopt;
}

const std::string& pii_kind_phrase(PiiKind k) {
  static const std::vector<std::string> phrases = {"full name",   "phone number",
                                                   "email address", "card number",
                                                   "street address", "id number"};
  return phrases.at(std::size_t(k));
}

int anchor_index(PiiKind k) { return int(k); }

std::optional<PiiKind> pii_kind_for_question(const std::string& question) {
  std::string q = lower(question);
  if (contains(q, "phone")) return PiiKind::phone;
  if (contains(q, "email")) return PiiKind::email;
  if (contains(q, "card")) return PiiKind::card_number;
  if (contains(q, "address")) return PiiKind::address;
  if (contains(q, "id number") || contains(q, "account id")) return PiiKind::id_number;
  if (contains(q, "name")) return PiiKind::name;
  return std::nullopt;
}

bool is_privacy_question(const std::string& question) {
  std::string q = lower(question);
  return pii_kind_for_question(question).has_value() || contains(q, "private") ||
         contains(q, "personal") || contains(q, "sensitive");
}

}  // namespace dualtap::probes
