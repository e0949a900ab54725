#pragma once

#include <cstdint>
#include <random>

namespace volcp {

// splitmix64 step; used to derive decorrelated child seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Child seed for stream `index` of master `seed`. Pure function of its inputs,
// so replication results do not depend on scheduling or worker count.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

// Deterministic source of normals/uniforms. One instance per stream; never
// shared across threads.
class rng {
  public:
    explicit rng(std::uint64_t seed) : eng_(seed) {}

    double normal() { return normal_(eng_); }

    // U[0,1)
    double uniform() { return uniform_(eng_); }

    std::uint64_t next_u64() { return eng_(); }

  private:
    std::mt19937_64 eng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace volcp
