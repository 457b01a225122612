#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace mlmonkey {

// Deterministic PRNG with pinned distribution code so results never depend on
// the standard library's <random> internals. Core generator is splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double uniform01();

    // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    long long uniform_int(long long lo, long long hi);

    std::size_t uniform_index(std::size_t size);

    bool chance(double p) { return uniform01() < p; }

    // Box-Muller; keeps the spare draw for the next call.
    double gaussian(double mean, double stddev);

    template <typename T>
    void shuffle(std::vector<T>& values) {
        if (values.size() < 2) {
            return;
        }
        for (std::size_t i = values.size() - 1; i > 0; --i) {
            std::size_t j = uniform_index(i + 1);
            std::swap(values[i], values[j]);
        }
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Derives an independent subsystem seed from a root seed and a label
// ("ga", "monkey", "etl", ...), so components stay decorrelated but
// reproducible from one --seed flag.
std::uint64_t derive_seed(std::uint64_t root, std::string_view label);

// Stateless per-index draw in [0, 1). Used by the ETL undersampler so the
// decision for row i depends only on (seed, i), independent of processing
// order or chunking.
double uniform01_at(std::uint64_t seed, std::uint64_t index);

}  // namespace mlmonkey
