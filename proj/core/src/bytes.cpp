#include "zka/bytes.hpp"

#include <array>
#include <stdexcept>

namespace zka {

std::string to_hex(ByteView data) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

namespace {

constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<std::int8_t, 256> build_reverse() {
    std::array<std::int8_t, 256> rev;
    rev.fill(-1);
    for (int i = 0; i < 64; ++i) rev[static_cast<unsigned char>(kAlphabet[i])] = static_cast<std::int8_t>(i);
    return rev;
}

}  // namespace

std::string base64_encode(ByteView data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= data.size(); i += 3) {
        std::uint32_t chunk = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
        out.push_back(kAlphabet[(chunk >> 18) & 63]);
        out.push_back(kAlphabet[(chunk >> 12) & 63]);
        out.push_back(kAlphabet[(chunk >> 6) & 63]);
        out.push_back(kAlphabet[chunk & 63]);
    }
    if (i + 1 == data.size()) {
        std::uint32_t chunk = data[i] << 16;
        out.push_back(kAlphabet[(chunk >> 18) & 63]);
        out.push_back(kAlphabet[(chunk >> 12) & 63]);
        out.append("==");
    } else if (i + 2 == data.size()) {
        std::uint32_t chunk = (data[i] << 16) | (data[i + 1] << 8);
        out.push_back(kAlphabet[(chunk >> 18) & 63]);
        out.push_back(kAlphabet[(chunk >> 12) & 63]);
        out.push_back(kAlphabet[(chunk >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

Bytes base64_decode(const std::string& text) {
    static const std::array<std::int8_t, 256> rev = build_reverse();
    if (text.size() % 4 != 0) throw std::invalid_argument("base64: length not a multiple of 4");
    Bytes out;
    out.reserve(text.size() / 4 * 3);
    for (std::size_t i = 0; i < text.size(); i += 4) {
        int pad = 0;
        std::uint32_t chunk = 0;
        for (int j = 0; j < 4; ++j) {
            char ch = text[i + j];
            if (ch == '=') {
                // Padding is only legal in the last one or two positions.
                if (i + 4 != text.size() || j < 2) {
                    throw std::invalid_argument("base64: misplaced padding");
                }
                ++pad;
                chunk <<= 6;
            } else {
                if (pad > 0) throw std::invalid_argument("base64: data after padding");
                std::int8_t v = rev[static_cast<unsigned char>(ch)];
                if (v < 0) throw std::invalid_argument("base64: invalid character");
                chunk = (chunk << 6) | static_cast<std::uint32_t>(v);
            }
        }
        out.push_back(static_cast<std::uint8_t>((chunk >> 16) & 0xFF));
        if (pad < 2) out.push_back(static_cast<std::uint8_t>((chunk >> 8) & 0xFF));
        if (pad < 1) out.push_back(static_cast<std::uint8_t>(chunk & 0xFF));
    }
    return out;
}

}  // namespace zka
