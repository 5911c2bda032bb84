#ifndef KCME_ORACLE_HPP
#define KCME_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bit_vector.hpp"
#include "decision.hpp"
#include "errors.hpp"
#include "mask_graph.hpp"
#include "model.hpp"
#include "nucs.hpp"

// Exhaustive ground-truth solvers. They depend on nothing from the FPT path
// except hamming_restricted and the data types.

namespace kcme::oracle {

inline constexpr std::size_t max_solve_bits = 24;
inline constexpr std::size_t max_nucs_length = 20;
inline constexpr std::size_t max_vc_vertices = 20;

namespace detail {

/// Bit i of `code`, read with position 0 as the most significant of `width`.
inline BitVector decode_string(std::uint64_t code, std::size_t offset, std::size_t width, std::size_t total) {
    BitVector out(width);
    for (std::size_t i = 0; i < width; ++i) {
        if ((code >> (total - 1 - (offset + i))) & 1U) out.set(i);
    }
    return out;
}

}  // namespace detail

/// Tries all 2^(k*m) center matrices in lexicographic order (center 1 first,
/// coordinate 0 most significant). Rows go to the smallest feasible center.
inline Decision brute_force_solve(const Instance& inst) {
    const std::size_t k = inst.k();
    const std::size_t m = inst.m();
    if (k > max_solve_bits || k * m > max_solve_bits) {
        throw SizeGuardError("brute_force_solve: k*m = " + std::to_string(k * m) + " exceeds " +
                             std::to_string(max_solve_bits));
    }
    const std::size_t total = k * m;
    const std::uint64_t configs = std::uint64_t{1} << total;
    const BitVector all(m, true);
    std::vector<BitVector> centers(k);
    std::vector<std::size_t> assignment(inst.n());

    for (std::uint64_t code = 0; code < configs; ++code) {
        for (std::size_t j = 0; j < k; ++j) centers[j] = detail::decode_string(code, j * m, m, total);
        bool all_rows = true;
        for (std::size_t r = 0; r < inst.n() && all_rows; ++r) {
            bool placed = false;
            for (std::size_t j = 0; j < k; ++j) {
                if (hamming_restricted(inst.row(r), centers[j], all) <= inst.d()) {
                    assignment[r] = j;
                    placed = true;
                    break;
                }
            }
            all_rows = placed;
        }
        if (all_rows) {
            Decision dec;
            dec.feasible = true;
            dec.witness = Solution{centers, assignment};
            return dec;
        }
    }
    return Decision{};
}

/// Lexicographically smallest center meeting every budget, by enumeration.
inline std::optional<BitVector> brute_force_nucs(const NucsInstance& inst) {
    const std::size_t len = inst.length;
    if (len > max_nucs_length) {
        throw SizeGuardError("brute_force_nucs: length " + std::to_string(len) + " exceeds " +
                             std::to_string(max_nucs_length));
    }
    const BitVector all(len, true);
    const std::uint64_t configs = std::uint64_t{1} << len;
    for (std::uint64_t code = 0; code < configs; ++code) {
        const BitVector center = detail::decode_string(code, 0, len, len);
        bool ok = true;
        for (std::size_t i = 0; i < inst.p() && ok; ++i) {
            ok = static_cast<std::int64_t>(hamming_restricted(inst.strings[i], center, all)) <= inst.budgets[i];
        }
        if (ok) return center;
    }
    return std::nullopt;
}

/// Smallest vertex cover by subset search in increasing size; among minimum
/// covers the lexicographically first vertex list wins, with rows ordered
/// before coordinates.
inline VertexSet brute_force_vc(const MaskGraph& g) {
    const std::size_t rows = g.row_count();
    const std::size_t total = g.vertex_count();
    if (total > max_vc_vertices) {
        throw SizeGuardError("brute_force_vc: " + std::to_string(total) + " vertices exceed " +
                             std::to_string(max_vc_vertices));
    }
    const auto edges = g.edges();
    std::vector<std::size_t> pick;
    for (std::size_t size = 0; size <= total; ++size) {
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            std::vector<char> in(total, 0);
            for (const auto v : pick) in[v] = 1;
            bool ok = true;
            for (const auto& [r, c] : edges) {
                if (!in[r] && !in[rows + c]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                VertexSet s;
                for (const auto v : pick) {
                    if (v < rows) {
                        s.rows.push_back(v);
                    } else {
                        s.coords.push_back(v - rows);
                    }
                }
                return s;
            }
            // Next combination in lexicographic order.
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == total - size + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {};  // unreachable: the full vertex set is a cover
}

}  // namespace kcme::oracle

#endif  // KCME_ORACLE_HPP
