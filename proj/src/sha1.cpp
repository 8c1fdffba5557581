#include "cab/sha1.hpp"

#include <array>
#include <cstdint>
#include <cstring>

namespace cab {

namespace {

inline std::uint32_t rotl32(std::uint32_t x, int n) {
    return (x << n) | (x >> (32 - n));
}

}  // namespace

std::string sha1_hex(std::string_view data) {
    std::array<std::uint32_t, 5> h = {0x67452301u, 0xefcdab89u, 0x98badcfeu,
                                      0x10325476u, 0xc3d2e1f0u};

    // Pad to a multiple of 64 bytes: 0x80, zeros, 64-bit big-endian bit length.
    const std::uint64_t bit_len = static_cast<std::uint64_t>(data.size()) * 8;
    std::string msg(data);
    msg.push_back(static_cast<char>(0x80));
    while (msg.size() % 64 != 56) msg.push_back('\0');
    for (int shift = 56; shift >= 0; shift -= 8)
        msg.push_back(static_cast<char>((bit_len >> shift) & 0xff));

    std::uint32_t w[80];
    for (std::size_t chunk = 0; chunk < msg.size(); chunk += 64) {
        const auto* block = reinterpret_cast<const unsigned char*>(msg.data() + chunk);
        for (int i = 0; i < 16; ++i) {
            w[i] = (static_cast<std::uint32_t>(block[4 * i]) << 24) |
                   (static_cast<std::uint32_t>(block[4 * i + 1]) << 16) |
                   (static_cast<std::uint32_t>(block[4 * i + 2]) << 8) |
                   static_cast<std::uint32_t>(block[4 * i + 3]);
        }
        for (int i = 16; i < 80; ++i)
            w[i] = rotl32(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);

        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
        for (int i = 0; i < 80; ++i) {
            std::uint32_t f, k;
            if (i < 20) {
                f = (b & c) | ((~b) & d);
                k = 0x5a827999u;
            } else if (i < 40) {
                f = b ^ c ^ d;
                k = 0x6ed9eba1u;
            } else if (i < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8f1bbcdcu;
            } else {
                f = b ^ c ^ d;
                k = 0xca62c1d6u;
            }
            const std::uint32_t temp = rotl32(a, 5) + f + e + k + w[i];
            e = d;
            d = c;
            c = rotl32(b, 30);
            b = a;
            a = temp;
        }
        h[0] += a;
        h[1] += b;
        h[2] += c;
        h[3] += d;
        h[4] += e;
    }

    static const char* digits = "0123456789abcdef";
    std::string hex;
    hex.reserve(40);
    for (std::uint32_t word : h) {
        for (int shift = 28; shift >= 0; shift -= 4)
            hex.push_back(digits[(word >> shift) & 0xf]);
    }
    return hex;
}

std::string git_blob_sha1(std::string_view data) {
    std::string preimage = "blob " + std::to_string(data.size());
    preimage.push_back('\0');
    preimage.append(data);
    return sha1_hex(preimage);
}

}  // namespace cab
