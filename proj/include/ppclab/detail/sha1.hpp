#pragma once

// Minimal SHA-1 for content-hashing experiment configs into report metadata.
// Not a security boundary — just a stable fingerprint of the canonical
// config text.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

namespace ppclab::detail {

class Sha1 {
 public:
  void update(const void* data, std::size_t len) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    total_ += len;
    while (len > 0) {
      const std::size_t take = std::min(len, buf_.size() - buf_len_);
      std::memcpy(buf_.data() + buf_len_, p, take);
      buf_len_ += take;
      p += take;
      len -= take;
      if (buf_len_ == buf_.size()) {
        process_block(buf_.data());
        buf_len_ = 0;
      }
    }
  }

  std::string hex_digest() {
    const std::uint64_t bit_len = total_ * 8;
    const std::uint8_t pad = 0x80;
    update(&pad, 1);
    const std::uint8_t zero = 0x00;
    while (buf_len_ != 56) update(&zero, 1);
    std::array<std::uint8_t, 8> len_be{};
    for (int i = 0; i < 8; ++i)
      len_be[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(bit_len >> (56 - 8 * i));
    update(len_be.data(), len_be.size());

    std::string out;
    out.reserve(40);
    static const char* hex = "0123456789abcdef";
    for (std::uint32_t word : h_)
      for (int i = 28; i >= 0; i -= 4)
        out.push_back(hex[(word >> i) & 0xF]);
    return out;
  }

 private:
  static std::uint32_t rol(std::uint32_t v, int bits) {
    return (v << bits) | (v >> (32 - bits));
  }

  void process_block(const std::uint8_t* p) {
    std::array<std::uint32_t, 80> w{};
    for (int t = 0; t < 16; ++t)
      w[static_cast<std::size_t>(t)] =
          (static_cast<std::uint32_t>(p[4 * t]) << 24) |
          (static_cast<std::uint32_t>(p[4 * t + 1]) << 16) |
          (static_cast<std::uint32_t>(p[4 * t + 2]) << 8) |
          static_cast<std::uint32_t>(p[4 * t + 3]);
    for (int t = 16; t < 80; ++t)
      w[static_cast<std::size_t>(t)] =
          rol(w[static_cast<std::size_t>(t - 3)] ^
                  w[static_cast<std::size_t>(t - 8)] ^
                  w[static_cast<std::size_t>(t - 14)] ^
                  w[static_cast<std::size_t>(t - 16)],
              1);

    std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3], e = h_[4];
    for (int t = 0; t < 80; ++t) {
      std::uint32_t f, k;
      if (t < 20) {
        f = (b & c) | ((~b) & d);
        k = 0x5A827999u;
      } else if (t < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (t < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      const std::uint32_t tmp =
          rol(a, 5) + f + e + k + w[static_cast<std::size_t>(t)];
      e = d;
      d = c;
      c = rol(b, 30);
      b = a;
      a = tmp;
    }
    h_[0] += a;
    h_[1] += b;
    h_[2] += c;
    h_[3] += d;
    h_[4] += e;
  }

  std::array<std::uint32_t, 5> h_{0x67452301u, 0xEFCDAB89u, 0x98BADCFEu,
                                  0x10325476u, 0xC3D2E1F0u};
  std::array<std::uint8_t, 64> buf_{};
  std::size_t buf_len_ = 0;
  std::uint64_t total_ = 0;
};

inline std::string sha1_hex(std::string_view s) {
  Sha1 h;
  h.update(s.data(), s.size());
  return h.hex_digest();
}

}  // namespace ppclab::detail
