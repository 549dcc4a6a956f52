#include "dualtap/core/serialize.hpp"

#include <cstring>
#include <fstream>

#include "dualtap/core/hash.hpp"

namespace dualtap {

std::vector<unsigned char> read_file_bytes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)),
                                   std::istreambuf_iterator<char>());
  return bytes;
}

void write_file_bytes(const std::string& path, const void* data, std::size_t n) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open file for writing: " + path);
  f.write(static_cast<const char*>(data), std::streamsize(n));
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string hash_file_hex(const std::string& path) {
  auto bytes = read_file_bytes(path);
  return hash_bytes_hex(bytes.data(), bytes.size());
}

BlobWriter::BlobWriter(const std::string& magic8, std::uint32_t version) {
  if (magic8.size() != 8) throw std::logic_error("blob magic must be 8 bytes");
  buf_.insert(buf_.end(), magic8.begin(), magic8.end());
  put_u32(version);
}

void BlobWriter::put_u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back((unsigned char)((v >> (8 * i)) & 0xff));
}

void BlobWriter::put_u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf_.push_back((unsigned char)((v >> (8 * i)) & 0xff));
}

void BlobWriter::put_string(const std::string& s) {
  put_u64(s.size());
  buf_.insert(buf_.end(), s.begin(), s.end());
}

void BlobWriter::put_doubles(const double* p, std::size_t n) {
  put_u64(n);
  std::size_t off = buf_.size();
  buf_.resize(off + n * sizeof(double));
  std::memcpy(buf_.data() + off, p, n * sizeof(double));
}

void BlobWriter::put_vector(const VectorR& v) { put_doubles(v.data(), std::size_t(v.size())); }

void BlobWriter::write_file(const std::string& path) const {
  write_file_bytes(path, buf_.data(), buf_.size());
}

BlobReader::BlobReader(std::vector<unsigned char> bytes, const std::string& magic8,
                       std::uint32_t expect_version)
    : buf_(std::move(bytes)) {
  if (buf_.size() < 12 || std::memcmp(buf_.data(), magic8.data(), 8) != 0)
    throw std::runtime_error("bad blob magic (expected " + magic8 + ")");
  pos_ = 8;
  std::uint32_t ver = get_u32();
  if (ver != expect_version)
    throw std::runtime_error("unsupported blob version " + std::to_string(ver) + " (expected " +
                             std::to_string(expect_version) + ")");
}

BlobReader BlobReader::from_file(const std::string& path, const std::string& magic8,
                                 std::uint32_t expect_version) {
  return BlobReader(read_file_bytes(path), magic8, expect_version);
}

void BlobReader::need(std::size_t n) const {
  if (pos_ + n > buf_.size()) throw std::runtime_error("blob truncated");
}

std::uint32_t BlobReader::get_u32() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(buf_[pos_ + std::size_t(i)]) << (8 * i);
  pos_ += 4;
  return v;
}

std::uint64_t BlobReader::get_u64() {
  need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(buf_[pos_ + std::size_t(i)]) << (8 * i);
  pos_ += 8;
  return v;
}

std::string BlobReader::get_string() {
  std::uint64_t n = get_u64();
  need(std::size_t(n));
  std::string s(reinterpret_cast<const char*>(buf_.data() + pos_), std::size_t(n));
  pos_ += std::size_t(n);
  return s;
}

void BlobReader::get_doubles(double* p, std::size_t n) {
  std::uint64_t stored = get_u64();
  if (stored != n)
    throw std::runtime_error("blob double-array size mismatch: stored " + std::to_string(stored) +
                             ", expected " + std::to_string(n));
  need(n * sizeof(double));
  std::memcpy(p, buf_.data() + pos_, n * sizeof(double));
  pos_ += n * sizeof(double);
}

VectorR BlobReader::get_vector() {
  need(8);
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= std::uint64_t(buf_[pos_ + std::size_t(i)]) << (8 * i);
  VectorR v(Eigen::Index(n));
  get_doubles(v.data(), std::size_t(n));
  return v;
}

}  // namespace dualtap
