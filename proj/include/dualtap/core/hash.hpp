#pragma once

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace dualtap {

/// FNV-1a 64-bit, used for content hashes of parameter blobs, images and
/// files. Not cryptographic; good enough for change detection and cache keys.
class Fnv1a {
 public:
  Fnv1a& update(const void* data, std::size_t n) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ULL;
    }
    return *this;
  }
  Fnv1a& update(const std::string& s) { return update(s.data(), s.size()); }
  Fnv1a& update(double v) { return update(&v, sizeof v); }
  Fnv1a& update(std::uint64_t v) { return update(&v, sizeof v); }
  Fnv1a& update(const std::vector<double>& v) { return update(v.data(), v.size() * sizeof(double)); }

  std::uint64_t value() const { return h_; }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    std::uint64_t v = h_;
    for (int i = 15; i >= 0; --i) {
      s[std::size_t(i)] = digits[v & 0xf];
      v >>= 4;
    }
    return s;
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

inline std::string hash_bytes_hex(const void* data, std::size_t n) {
  Fnv1a h;
  h.update(data, n);
  return h.hex();
}

std::string hash_file_hex(const std::string& path);

}  // namespace dualtap
