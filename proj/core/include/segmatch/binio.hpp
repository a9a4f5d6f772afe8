#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace segmatch::io {

/// Append-only little-endian byte buffer used for the binary file formats.
class ByteWriter {
public:
    void put_u8(std::uint8_t v);
    void put_u32(std::uint32_t v);
    void put_u64(std::uint64_t v);
    void put_f64(double v);
    void put_bytes(std::string_view bytes);
    /// u32 length prefix followed by the raw bytes.
    void put_string(std::string_view s);

    const std::string& buffer() const { return buf_; }

private:
    std::string buf_;
};

/// Cursor over an in-memory byte buffer; throws IoError on truncation.
class ByteReader {
public:
    explicit ByteReader(std::string_view data, std::string label)
        : data_(data), label_(std::move(label)) {}

    std::uint8_t get_u8();
    std::uint32_t get_u32();
    std::uint64_t get_u64();
    double get_f64();
    std::string get_string();
    std::string get_bytes(std::size_t n);

    std::size_t remaining() const { return data_.size() - pos_; }
    bool at_end() const { return pos_ == data_.size(); }

private:
    void need(std::size_t n) const;

    std::string_view data_;
    std::string label_;
    std::size_t pos_ = 0;
};

std::uint32_t crc32(std::string_view data);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temp file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

/// Serializes `payload`, appends crc32(payload), and writes the file.
void write_checksummed_file(const std::filesystem::path& path, const ByteWriter& payload);

/// Reads a file written by write_checksummed_file, verifies the trailing
/// checksum, and returns the payload bytes.
std::string read_checksummed_file(const std::filesystem::path& path);

} // namespace segmatch::io
