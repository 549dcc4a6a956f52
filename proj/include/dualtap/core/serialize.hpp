#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualtap/core/types.hpp"

namespace dualtap {

/// Little binary blob format shared by surrogate and generator checkpoints:
/// [8-byte magic][u32 version][payload]. Doubles are dumped raw (IEEE754,
/// native little-endian), so same-platform round trips are bit identical.
class BlobWriter {
 public:
  BlobWriter(const std::string& magic8, std::uint32_t version);

  void put_u32(std::uint32_t v);
  void put_u64(std::uint64_t v);
  void put_string(const std::string& s);
  void put_doubles(const double* p, std::size_t n);
  void put_vector(const VectorR& v);

  const std::vector<unsigned char>& bytes() const { return buf_; }
  void write_file(const std::string& path) const;

 private:
  std::vector<unsigned char> buf_;
};

class BlobReader {
 public:
  BlobReader(std::vector<unsigned char> bytes, const std::string& magic8,
             std::uint32_t expect_version);
  static BlobReader from_file(const std::string& path, const std::string& magic8,
                              std::uint32_t expect_version);

  std::uint32_t get_u32();
  std::uint64_t get_u64();
  std::string get_string();
  void get_doubles(double* p, std::size_t n);
  VectorR get_vector();

  bool at_end() const { return pos_ == buf_.size(); }

 private:
  void need(std::size_t n) const;
  std::vector<unsigned char> buf_;
  std::size_t pos_ = 0;
};

std::vector<unsigned char> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const void* data, std::size_t n);

}  // namespace dualtap
