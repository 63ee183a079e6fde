#ifndef HUNLEMMA_ARCHIVE_HPP
#define HUNLEMMA_ARCHIVE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

// Little-endian binary encoding helpers and the sectioned archive frame the
// model file uses. Layout:
//
//   8 bytes   magic "hunlemma"
//   u32       format version
//   u32       section count
//   per section: u32 tag, u64 offset, u64 size, u64 fnv1a-64 checksum
//   section payloads at the recorded offsets
//
// Sections are independently checksummed so a corrupted file fails loudly
// instead of producing a partial model.

namespace hunlemma {

enum class ArchiveError {
  bad_magic,
  bad_version,
  truncated,
  checksum_mismatch,
  missing_section,
};

class ModelFormatError : public std::runtime_error {
 public:
  ModelFormatError(ArchiveError code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ArchiveError code() const { return code_; }

 private:
  ArchiveError code_;
};

class ByteWriter {
 public:
  void u8(std::uint8_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f32(float v);
  void str(std::string_view v);  // u32 length prefix + bytes

  const std::string& buffer() const { return buf_; }
  std::string take() { return std::move(buf_); }

 private:
  std::string buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  float f32();
  std::string str();

  bool at_end() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const;

  std::string_view data_;
  std::size_t pos_ = 0;
};

std::uint64_t fnv1a64(std::string_view bytes);

constexpr std::string_view kArchiveMagic = "hunlemma";
constexpr std::uint32_t kFormatVersion = 1;

constexpr std::uint32_t section_tag(char a, char b, char c, char d) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(a)) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b)) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(c)) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(d)) << 24;
}

}  // namespace hunlemma

#endif
