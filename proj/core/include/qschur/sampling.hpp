#pragma once

#include <cstdint>
#include <vector>

#include "qschur/tensor.hpp"

namespace qschur {

/// Small deterministic PRNG (splitmix64). Fully specified here so that
/// seeded runs reproduce bit-for-bit across platforms and compilers.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for
    /// test-input generation and keeps the stream portable.
    long long next_in(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Stable 64-bit hash used to derive independent substreams per identity.
std::uint64_t fnv1a(const std::string& s);

struct SampleParams {
    int r = 2;
    long long window_lo = -3;
    long long window_hi = 6;
    int support_bound = 6;
    int coeff_bound = 3;
};

/// A random finitely supported vector: between 1 and support_bound terms,
/// entries inside the window, nonzero integer coefficients bounded by
/// coeff_bound. Colliding tuples merge, so the realized support can be
/// smaller (or a term can cancel away).
TensorVector random_vector(Prng& rng, const SampleParams& params, const ScalarMode& mode);

/// All r-tuples with entries in [lo, hi], in lexicographic order.
std::vector<IndexTuple> enumerate_window_tuples(int r, long long lo, long long hi);

/// (hi - lo + 1)^r, saturating at a large sentinel to avoid overflow.
std::uint64_t window_tuple_count(int r, long long lo, long long hi);

}  // namespace qschur
