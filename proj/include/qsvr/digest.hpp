#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>

namespace qsvr {

// FNV-1a, 64-bit. Content digests for covariate sets and input files; not
// cryptographic, just a stable fingerprint for manifests and model files.
inline std::uint64_t fnv1a64(std::span<const std::byte> bytes,
                             std::uint64_t state = 0xCBF29CE484222325ULL) {
    for (std::byte b : bytes) {
        state ^= static_cast<std::uint64_t>(b);
        state *= 0x100000001B3ULL;
    }
    return state;
}

inline std::uint64_t fnv1a64_append(std::uint64_t state, double v) {
    std::byte raw[sizeof(double)];
    std::memcpy(raw, &v, sizeof(double));
    return fnv1a64(std::span<const std::byte>(raw, sizeof(double)), state);
}

std::string to_hex(std::uint64_t v);

// Digest of a file's raw bytes; throws std::runtime_error if unreadable.
std::string digest_file(const std::string& path);

}  // namespace qsvr
