#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "quatmat/errors.hpp"
#include "quatmat/matrix.hpp"

namespace quatmat {

// QMH1 container: 4-byte magic "QMH1", n as 64-bit little-endian unsigned,
// then the four n*n planes (a, b, c, d) as 64-bit little-endian IEEE
// doubles, row-major. Total length is exactly 12 + 32*n^2 bytes and
// round-trips bit-identically.

inline constexpr char kQmatMagic[4] = {'Q', 'M', 'H', '1'};
inline constexpr std::uint64_t kQmatMaxOrder = 100000000ull;

namespace detail {

inline void put_u64_le(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

inline std::uint64_t get_u64_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace detail

inline void write_qmat(const std::string& path, const QuatMatrix& z) {
  if (z.rows() != z.cols()) {
    throw DimensionError("write_qmat: matrix must be square");
  }
  const std::uint64_t n = z.rows();
  if (n == 0) throw IoError("write_qmat: refusing to write an empty matrix");
  std::vector<unsigned char> buf;
  buf.reserve(12 + 32 * static_cast<std::size_t>(n) * n);
  buf.insert(buf.end(), kQmatMagic, kQmatMagic + 4);
  detail::put_u64_le(buf, n);
  const RealMatrix* planes[4] = {&z.a, &z.b, &z.c, &z.d};
  for (const RealMatrix* plane : planes) {
    for (double v : plane->data()) {
      detail::put_u64_le(buf, std::bit_cast<std::uint64_t>(v));
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("write_qmat: cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write_qmat: short write to '" + path + "'");
}

inline QuatMatrix read_qmat(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw IoError("read_qmat: cannot open '" + path + "'");
  const std::streamsize size = in.tellg();
  in.seekg(0);
  if (size < 12) throw IoError("read_qmat: '" + path + "' is truncated");
  std::vector<unsigned char> buf(static_cast<std::size_t>(size));
  in.read(reinterpret_cast<char*>(buf.data()), size);
  if (!in) throw IoError("read_qmat: short read from '" + path + "'");

  if (std::memcmp(buf.data(), kQmatMagic, 4) != 0) {
    throw IoError("read_qmat: '" + path + "' has a bad magic header");
  }
  const std::uint64_t n = detail::get_u64_le(buf.data() + 4);
  if (n == 0 || n > kQmatMaxOrder) {
    throw IoError("read_qmat: '" + path + "' declares implausible order " +
                  std::to_string(n));
  }
  const std::uint64_t expected = 12 + 32 * n * n;
  if (static_cast<std::uint64_t>(size) != expected) {
    throw IoError("read_qmat: '" + path + "' has length " + std::to_string(size) +
                  ", expected " + std::to_string(expected));
  }
  QuatMatrix z(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  RealMatrix* planes[4] = {&z.a, &z.b, &z.c, &z.d};
  const unsigned char* p = buf.data() + 12;
  for (RealMatrix* plane : planes) {
    for (double& v : plane->data()) {
      v = std::bit_cast<double>(detail::get_u64_le(p));
      p += 8;
    }
  }
  return z;
}

}  // namespace quatmat
