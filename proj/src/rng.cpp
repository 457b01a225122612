#include "mlmonkey/rng.hpp"

#include <cmath>

namespace mlmonkey {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
    return splitmix64(state_);
}

double Rng::uniform01() {
    // 53 high-quality bits -> double in [0, 1).
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

long long Rng::uniform_int(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next_u64() % span);
}

std::size_t Rng::uniform_index(std::size_t size) {
    return static_cast<std::size_t>(next_u64() % static_cast<std::uint64_t>(size));
}

double Rng::gaussian(double mean, double stddev) {
    if (has_spare_) {
        has_spare_ = false;
        return mean + stddev * spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return mean + stddev * u * factor;
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view label) {
    // FNV-1a over the label, mixed with the root seed, then tempered.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    std::uint64_t state = root ^ h;
    return splitmix64(state);
}

double uniform01_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::uint64_t z = splitmix64(state);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace mlmonkey
