#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lteu {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

constexpr std::uint64_t fnv1a(std::string_view s, std::uint64_t h = kFnvOffset) {
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t fnv1a_bytes(const void* data, std::size_t n,
                                 std::uint64_t h = kFnvOffset) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

// Every random draw comes from an engine keyed by (seed, call-site label) so
// operations stay pure and independent streams never alias.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::string_view label) {
    std::mt19937_64 eng(seed ^ fnv1a(label));
    eng.discard(16);
    return eng;
}

}  // namespace lteu
