#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace kxor {

// SplitMix64 generator. Streams derived from (seed, stream_id) are
// independent, so parallel callers with distinct stream ids reproduce the
// same results regardless of scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // The stream id must pass through the output hash: seeding stream t at
    // state seed + gamma*t would make stream t+1 replay stream t's outputs
    // shifted by one, because next() itself advances the state by gamma.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        Rng mixer(seed + 0x9e3779b97f4a7c15ULL * (stream_id + 1));
        return Rng(mixer.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). Modulo bias is negligible for the small n
    // used here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    int sign() { return (next() & 1u) ? 1 : -1; }

    bool coin() { return (next() & 1u) != 0; }

    // Marsaglia polar method.
    double normal() {
        for (;;) {
            double u = 2.0 * uniform() - 1.0;
            double v = 2.0 * uniform() - 1.0;
            double s = u * u + v * v;
            if (s > 0.0 && s < 1.0) {
                double f = std::sqrt(-2.0 * std::log(s) / s);
                return u * f;
            }
        }
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace kxor
