#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hpai {

/// splitmix64 step; used for seed derivation so that unrelated streams
/// never share a prefix even for adjacent seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
    return splitmix64(base ^ splitmix64(salt));
}

/// FNV-1a, for folding string ids (profile names etc.) into seeds.
inline std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic RNG. mt19937_64 gives a portable core sequence; the
/// derived draws below avoid std::uniform_*_distribution on purpose,
/// since those are implementation-defined and would break byte-identical
/// outputs across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform int in [0, n). Modulo bias is ~n/2^64, irrelevant here.
    int uniform_int(int n) { return int(next_u64() % std::uint64_t(n)); }

private:
    std::mt19937_64 engine_;
};

}  // namespace hpai
