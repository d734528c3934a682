#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "lbcnn/errors.hpp"

// Little-endian binary stream helpers shared by the bank and model file
// formats. Written byte by byte so the layout does not depend on host
// endianness.

namespace lbcnn::io {

template <typename T>
void write_le(std::ostream& os, T value) {
    static_assert(std::is_integral_v<T>);
    auto u = static_cast<std::uint64_t>(value);
    char bytes[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((u >> (8 * i)) & 0xff);
    os.write(bytes, sizeof(T));
}

inline void write_f64(std::ostream& os, double value) {
    std::uint64_t bits;
    std::memcpy(&bits, &value, sizeof(bits));
    write_le(os, bits);
}

template <typename T>
T read_le(std::istream& is, const char* what) {
    char bytes[sizeof(T)];
    if (!is.read(bytes, sizeof(T)))
        throw FormatError(std::string("truncated file while reading ") + what);
    std::uint64_t u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        u |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
    return static_cast<T>(u);
}

inline double read_f64(std::istream& is, const char* what) {
    const auto bits = read_le<std::uint64_t>(is, what);
    double value;
    std::memcpy(&value, &bits, sizeof(value));
    return value;
}

inline void write_magic(std::ostream& os, const char magic[4]) { os.write(magic, 4); }

inline void expect_magic(std::istream& is, const char magic[4], const char* what) {
    char got[4];
    if (!is.read(got, 4) || std::memcmp(got, magic, 4) != 0)
        throw FormatError(std::string("bad magic for ") + what);
}

}  // namespace lbcnn::io
