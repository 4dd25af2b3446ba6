#include "qschur/sampling.hpp"

#include <stdexcept>
#include <string>

namespace qschur {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

TensorVector random_vector(Prng& rng, const SampleParams& params, const ScalarMode& mode) {
    if (params.window_lo > params.window_hi)
        throw std::invalid_argument("random_vector: empty window");
    if (params.support_bound < 1 || params.coeff_bound < 1)
        throw std::invalid_argument("random_vector: bounds must be >= 1");
    TensorVector vec(params.r, mode);
    const long long terms = rng.next_in(1, params.support_bound);
    for (long long t = 0; t < terms; ++t) {
        IndexTuple idx(static_cast<std::size_t>(params.r));
        for (auto& e : idx) e = rng.next_in(params.window_lo, params.window_hi);
        long long c = 0;
        while (c == 0) c = rng.next_in(-params.coeff_bound, params.coeff_bound);
        vec.add_term(std::move(idx), Scalar::from_int(mode, static_cast<long>(c)));
    }
    return vec;
}

std::vector<IndexTuple> enumerate_window_tuples(int r, long long lo, long long hi) {
    if (r < 1 || lo > hi) throw std::invalid_argument("enumerate_window_tuples: bad arguments");
    std::vector<IndexTuple> out;
    IndexTuple idx(static_cast<std::size_t>(r), lo);
    while (true) {
        out.push_back(idx);
        int pos = r - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == hi) {
            idx[static_cast<std::size_t>(pos)] = lo;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::uint64_t window_tuple_count(int r, long long lo, long long hi) {
    if (r < 1 || lo > hi) return 0;
    const std::uint64_t base = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t count = 1;
    for (int i = 0; i < r; ++i) {
        if (count > (1ULL << 40) / base) return 1ULL << 40;  // saturate
        count *= base;
    }
    return count;
}

}  // namespace qschur
