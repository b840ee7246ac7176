#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sptree {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_string(std::string_view s) noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

/// Child seed for stream `index` of `base`; independent of call order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(base) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

template <class... Rest>
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index, Rest... rest) noexcept {
    return derive_seed(derive_seed(base, index), static_cast<std::uint64_t>(rest)...);
}

}  // namespace sptree
