#ifndef KCME_GENERATOR_HPP
#define KCME_GENERATOR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bit_vector.hpp"
#include "model.hpp"

namespace kcme {

/// Planted-instance parameters. The mask keeps cell (r, c) only when r is one
/// of `split` chosen cover rows or c is one of the (vc - split) chosen cover
/// coordinates, so the mask graph has a vertex cover of size <= vc.
struct GenParams {
    std::size_t n = 1;
    std::size_t m = 1;
    std::size_t k = 1;
    std::size_t d = 0;
    std::size_t vc = 0;
    std::size_t split = 0;
    std::size_t flip_max = 0;
    std::uint64_t seed = 0;
};

struct PlantedInstance {
    Instance instance;
    Solution planted;
};

namespace detail {

/// Uniform draw in [0, bound) from the raw 64-bit stream. Written out by hand
/// because std::uniform_int_distribution is not portable across standard
/// libraries and generated files must be reproducible.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

/// `count` distinct values from [0, universe), in draw order.
inline std::vector<std::size_t> sample(std::mt19937_64& rng, std::size_t universe, std::size_t count) {
    std::vector<std::size_t> pool(universe);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::size_t>(draw(rng, universe - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace detail

inline void validate(const GenParams& p) {
    if (p.n < 1 || p.m < 1 || p.k < 1) throw std::invalid_argument("gen: n, m and k must be at least 1");
    if (p.split > std::min(p.vc, p.n)) throw std::invalid_argument("gen: split must be <= min(vc, n)");
    if (p.vc - p.split > p.m) throw std::invalid_argument("gen: vc - split must be <= m");
    if (p.flip_max > p.d) throw std::invalid_argument("gen: flips must be <= d");
}

inline PlantedInstance gen_planted(const GenParams& p) {
    validate(p);
    std::mt19937_64 rng(p.seed);

    const auto cover_rows = detail::sample(rng, p.n, p.split);
    const auto cover_coords = detail::sample(rng, p.m, p.vc - p.split);
    std::vector<char> row_in_cover(p.n, 0);
    for (const auto r : cover_rows) row_in_cover[r] = 1;
    std::vector<std::size_t> sorted_coords = cover_coords;
    std::sort(sorted_coords.begin(), sorted_coords.end());
    std::vector<std::size_t> all_coords(p.m);
    std::iota(all_coords.begin(), all_coords.end(), std::size_t{0});

    Solution planted;
    for (std::size_t j = 0; j < p.k; ++j) {
        BitVector c(p.m);
        for (std::size_t i = 0; i < p.m; ++i) c.set(i, (rng() >> 63) != 0);
        planted.centers.push_back(std::move(c));
    }

    std::vector<PartialString> rows;
    rows.reserve(p.n);
    for (std::size_t r = 0; r < p.n; ++r) {
        const auto j = static_cast<std::size_t>(detail::draw(rng, p.k));
        planted.assignment.push_back(j);
        const auto& present = row_in_cover[r] ? all_coords : sorted_coords;

        BitVector value = planted.centers[j];
        const auto flips = std::min<std::size_t>(static_cast<std::size_t>(detail::draw(rng, p.flip_max + 1)),
                                                 present.size());
        for (const auto idx : detail::sample(rng, present.size(), flips)) {
            const auto c = present[idx];
            value.set(c, !value.test(c));
        }
        rows.emplace_back(std::move(value), make_mask(p.m, present));
    }
    return {Instance(p.k, p.d, std::move(rows)), std::move(planted)};
}

inline Instance gen_instance(const GenParams& p) { return gen_planted(p).instance; }

}  // namespace kcme

#endif  // KCME_GENERATOR_HPP
