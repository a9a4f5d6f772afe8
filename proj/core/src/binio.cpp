#include "segmatch/binio.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <zlib.h>

#include "segmatch/error.hpp"

namespace segmatch::io {

void ByteWriter::put_u8(std::uint8_t v) {
    buf_.push_back(static_cast<char>(v));
}

void ByteWriter::put_u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
}

void ByteWriter::put_u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
}

void ByteWriter::put_f64(double v) {
    put_u64(std::bit_cast<std::uint64_t>(v));
}

void ByteWriter::put_bytes(std::string_view bytes) {
    buf_.append(bytes);
}

void ByteWriter::put_string(std::string_view s) {
    if (s.size() > UINT32_MAX) {
        throw IoError("string too long for length-prefixed encoding");
    }
    put_u32(static_cast<std::uint32_t>(s.size()));
    put_bytes(s);
}

void ByteReader::need(std::size_t n) const {
    if (data_.size() - pos_ < n) {
        throw IoError(label_ + ": truncated (needed " + std::to_string(n) +
                      " bytes at offset " + std::to_string(pos_) + ")");
    }
}

std::uint8_t ByteReader::get_u8() {
    need(1);
    return static_cast<std::uint8_t>(data_[pos_++]);
}

std::uint32_t ByteReader::get_u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    }
    pos_ += 4;
    return v;
}

std::uint64_t ByteReader::get_u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    }
    pos_ += 8;
    return v;
}

double ByteReader::get_f64() {
    return std::bit_cast<double>(get_u64());
}

std::string ByteReader::get_bytes(std::size_t n) {
    need(n);
    std::string out(data_.substr(pos_, n));
    pos_ += n;
    return out;
}

std::string ByteReader::get_string() {
    const std::uint32_t len = get_u32();
    return get_bytes(len);
}

std::uint32_t crc32(std::string_view data) {
    uLong c = ::crc32(0L, Z_NULL, 0);
    c = ::crc32(c, reinterpret_cast<const Bytef*>(data.data()),
                static_cast<uInt>(data.size()));
    return static_cast<std::uint32_t>(c);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view data) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open file for writing: " + tmp.string());
        }
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) {
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

void write_checksummed_file(const std::filesystem::path& path, const ByteWriter& payload) {
    ByteWriter trailer;
    trailer.put_u32(crc32(payload.buffer()));
    std::string data = payload.buffer();
    data += trailer.buffer();
    write_file_atomic(path, data);
}

std::string read_checksummed_file(const std::filesystem::path& path) {
    std::string data = read_file(path);
    if (data.size() < 4) {
        throw IoError(path.string() + ": truncated (no checksum)");
    }
    const std::string_view payload(data.data(), data.size() - 4);
    ByteReader tail(std::string_view(data).substr(data.size() - 4), path.string());
    const std::uint32_t stored = tail.get_u32();
    const std::uint32_t actual = crc32(payload);
    if (stored != actual) {
        char msg[96];
        std::snprintf(msg, sizeof(msg), "checksum mismatch (stored %08x, computed %08x)",
                      stored, actual);
        throw IoError(path.string() + ": " + msg);
    }
    return std::string(payload);
}

} // namespace segmatch::io
