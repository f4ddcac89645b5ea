#include "qsvr/digest.hpp"

#include <array>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace qsvr {

std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for digest: " + path);
    std::uint64_t state = 0xCBF29CE484222325ULL;
    std::array<char, 65536> buf{};
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        auto got = static_cast<std::size_t>(in.gcount());
        state = fnv1a64(std::as_bytes(std::span<const char>(buf.data(), got)), state);
    }
    return to_hex(state);
}

}  // namespace qsvr
