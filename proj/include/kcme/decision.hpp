#ifndef KCME_DECISION_HPP
#define KCME_DECISION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "model.hpp"

namespace kcme {

enum class FastPath : std::uint8_t {
    None,
    RadiusCoversLength,  // d >= m
    SingletonClusters,   // k >= n
};

/// Counters filled in by the solver. Structural fields are zero when a fast
/// path answered before the decomposition was built.
struct SolveStats {
    std::size_t vc = 0;
    std::size_t long_rows = 0;
    std::size_t cover_coords = 0;
    std::size_t short_rows = 0;
    std::size_t empty_rows = 0;

    std::uint64_t psi_examined = 0;
    std::uint64_t partials_examined = 0;
    std::uint64_t nucs_calls = 0;
    std::uint64_t nucs_cache_hits = 0;

    /// 2^(k*|C_S|) * k^|R_S|, or nullopt if it does not fit in 64 bits.
    std::optional<std::uint64_t> enumeration_bound;
    FastPath fast_path = FastPath::None;
};

struct Decision {
    bool feasible = false;
    std::optional<Solution> witness;
    SolveStats stats;
};

}  // namespace kcme

#endif  // KCME_DECISION_HPP
