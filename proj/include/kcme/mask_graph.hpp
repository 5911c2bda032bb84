#ifndef KCME_MASK_GRAPH_HPP
#define KCME_MASK_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bit_vector.hpp"
#include "errors.hpp"
#include "model.hpp"

namespace kcme {

/// Bipartite graph on rows x coordinates with one edge per present cell.
/// Isolated vertices are kept.
class MaskGraph {
   public:
    using Edge = std::pair<std::size_t, std::size_t>;

    MaskGraph(std::size_t rows, std::size_t coords) : coords_(coords), adj_(rows) {}

    MaskGraph(std::size_t rows, std::size_t coords, const std::vector<Edge>& edges) : MaskGraph(rows, coords) {
        for (const auto& [r, c] : edges) {
            if (r >= rows || c >= coords) throw StructuralError("edge endpoint out of range");
            adj_[r].push_back(c);
        }
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            edge_count_ += list.size();
        }
    }

    [[nodiscard]] std::size_t row_count() const noexcept { return adj_.size(); }
    [[nodiscard]] std::size_t coord_count() const noexcept { return coords_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return adj_.size() + coords_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

    /// Coordinates adjacent to row r, ascending.
    [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t r) const noexcept { return adj_[r]; }

    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t r = 0; r < adj_.size(); ++r) {
            for (const std::size_t c : adj_[r]) out.emplace_back(r, c);
        }
        return out;
    }

   private:
    friend MaskGraph build_graph(const Instance& inst);

    std::size_t coords_;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<std::size_t>> adj_;
};

inline MaskGraph build_graph(const Instance& inst) {
    MaskGraph g(inst.n(), inst.m());
    for (std::size_t r = 0; r < inst.n(); ++r) {
        g.adj_[r] = inst.row(r).present().ones();
        g.edge_count_ += g.adj_[r].size();
    }
    return g;
}

/// A vertex subset split by side. Both lists are sorted ascending.
struct VertexSet {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> coords;

    [[nodiscard]] std::size_t size() const noexcept { return rows.size() + coords.size(); }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// True iff every edge has an endpoint in `s`.
inline bool covers(const MaskGraph& g, const VertexSet& s) {
    std::vector<char> row_in(g.row_count(), 0);
    std::vector<char> coord_in(g.coord_count(), 0);
    for (const auto r : s.rows) {
        if (r < row_in.size()) row_in[r] = 1;
    }
    for (const auto c : s.coords) {
        if (c < coord_in.size()) coord_in[c] = 1;
    }
    for (std::size_t r = 0; r < g.row_count(); ++r) {
        if (row_in[r]) continue;
        for (const auto c : g.neighbors(r)) {
            if (!coord_in[c]) return false;
        }
    }
    return true;
}

struct Matching {
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> row_mate;    // coordinate matched to each row, or none
    std::vector<std::size_t> coord_mate;  // row matched to each coordinate, or none
    std::size_t size = 0;
};

/// Maximum bipartite matching by Hopcroft-Karp. Rows and adjacency lists are
/// scanned in index order, so the result is a function of the graph alone.
inline Matching maximum_matching(const MaskGraph& g) {
    const std::size_t n = g.row_count();
    const std::size_t inf = std::numeric_limits<std::size_t>::max();
    Matching mt;
    mt.row_mate.assign(n, Matching::none);
    mt.coord_mate.assign(g.coord_count(), Matching::none);

    std::vector<std::size_t> dist(n);
    std::vector<std::size_t> cursor(n);

    const auto bfs = [&] {
        std::queue<std::size_t> q;
        bool found_free = false;
        for (std::size_t r = 0; r < n; ++r) {
            if (mt.row_mate[r] == Matching::none) {
                dist[r] = 0;
                q.push(r);
            } else {
                dist[r] = inf;
            }
        }
        while (!q.empty()) {
            const std::size_t r = q.front();
            q.pop();
            for (const std::size_t c : g.neighbors(r)) {
                const std::size_t next = mt.coord_mate[c];
                if (next == Matching::none) {
                    found_free = true;
                } else if (dist[next] == inf) {
                    dist[next] = dist[r] + 1;
                    q.push(next);
                }
            }
        }
        return found_free;
    };

    // Iterative layered DFS; the explicit stack keeps deep augmenting paths
    // off the call stack.
    const auto augment = [&](std::size_t root) {
        std::vector<std::size_t> stack{root};
        std::vector<std::size_t> via;  // coordinate used to leave each stacked row
        while (!stack.empty()) {
            const std::size_t r = stack.back();
            bool advanced = false;
            const auto& nb = g.neighbors(r);
            while (cursor[r] < nb.size()) {
                const std::size_t c = nb[cursor[r]];
                const std::size_t next = mt.coord_mate[c];
                if (next == Matching::none) {
                    via.push_back(c);
                    // Flip the path.
                    for (std::size_t i = 0; i < stack.size(); ++i) {
                        mt.row_mate[stack[i]] = via[i];
                        mt.coord_mate[via[i]] = stack[i];
                    }
                    return true;
                }
                if (dist[next] == dist[r] + 1) {
                    via.push_back(c);
                    stack.push_back(next);
                    advanced = true;
                    break;
                }
                ++cursor[r];
            }
            if (!advanced) {
                dist[r] = inf;
                stack.pop_back();
                if (!via.empty()) {
                    via.pop_back();
                    ++cursor[stack.back()];
                }
            }
        }
        return false;
    };

    while (bfs()) {
        std::fill(cursor.begin(), cursor.end(), 0);
        for (std::size_t r = 0; r < n; ++r) {
            if (mt.row_mate[r] == Matching::none && augment(r)) ++mt.size;
        }
    }
    return mt;
}

/// Minimum vertex cover from a maximum matching via Koenig's construction:
/// Z = vertices reachable from unmatched rows by alternating paths; the cover
/// is (rows \ Z) + (coords in Z). Throws std::logic_error if the cover size
/// ever differs from the matching size.
inline VertexSet min_vertex_cover(const MaskGraph& g) {
    const Matching mt = maximum_matching(g);
    std::vector<char> row_seen(g.row_count(), 0);
    std::vector<char> coord_seen(g.coord_count(), 0);
    std::queue<std::size_t> q;
    for (std::size_t r = 0; r < g.row_count(); ++r) {
        if (mt.row_mate[r] == Matching::none) {
            row_seen[r] = 1;
            q.push(r);
        }
    }
    while (!q.empty()) {
        const std::size_t r = q.front();
        q.pop();
        for (const std::size_t c : g.neighbors(r)) {
            if (coord_seen[c]) continue;
            coord_seen[c] = 1;
            const std::size_t next = mt.coord_mate[c];
            if (next != Matching::none && !row_seen[next]) {
                row_seen[next] = 1;
                q.push(next);
            }
        }
    }
    VertexSet cover;
    for (std::size_t r = 0; r < g.row_count(); ++r) {
        if (!row_seen[r]) cover.rows.push_back(r);
    }
    for (std::size_t c = 0; c < g.coord_count(); ++c) {
        if (coord_seen[c]) cover.coords.push_back(c);
    }
    if (cover.size() != mt.size) {
        throw std::logic_error("Koenig cover size " + std::to_string(cover.size()) + " != matching size " +
                               std::to_string(mt.size));
    }
    return cover;
}

/// Split of the instance induced by a vertex cover S.
///
/// long_rows = S on the row side, cover_coords = S on the coordinate side,
/// free_coords = the remaining coordinates, short_rows = rows outside S with
/// at least one present entry (all of which lie in cover_coords). Rows with
/// no present entries appear in neither row list.
struct CoverDecomposition {
    VertexSet cover;
    std::vector<std::size_t> long_rows;
    std::vector<std::size_t> cover_coords;
    std::vector<std::size_t> free_coords;
    std::vector<std::size_t> short_rows;
    std::vector<std::size_t> empty_rows;
    BitVector cover_mask;  // length m, set on cover_coords
    BitVector free_mask;   // complement of cover_mask

    [[nodiscard]] std::size_t vc() const noexcept { return cover.size(); }
};

inline CoverDecomposition decompose(const Instance& inst, const VertexSet& s) {
    CoverDecomposition dec;
    dec.cover = s;
    std::sort(dec.cover.rows.begin(), dec.cover.rows.end());
    std::sort(dec.cover.coords.begin(), dec.cover.coords.end());
    if (std::adjacent_find(dec.cover.rows.begin(), dec.cover.rows.end()) != dec.cover.rows.end() ||
        std::adjacent_find(dec.cover.coords.begin(), dec.cover.coords.end()) != dec.cover.coords.end()) {
        throw StructuralError("vertex set has duplicate entries");
    }
    if (!dec.cover.rows.empty() && dec.cover.rows.back() >= inst.n()) {
        throw StructuralError("vertex set names a row outside [0, n)");
    }
    if (!dec.cover.coords.empty() && dec.cover.coords.back() >= inst.m()) {
        throw StructuralError("vertex set names a coordinate outside [0, m)");
    }

    dec.long_rows = dec.cover.rows;
    dec.cover_coords = dec.cover.coords;
    dec.cover_mask = make_mask(inst.m(), dec.cover_coords);
    dec.free_mask = ~dec.cover_mask;
    dec.free_coords = dec.free_mask.ones();

    std::vector<char> is_long(inst.n(), 0);
    for (const auto r : dec.long_rows) is_long[r] = 1;
    for (std::size_t r = 0; r < inst.n(); ++r) {
        if (is_long[r]) continue;
        const auto& present = inst.row(r).present();
        if (present.none()) {
            dec.empty_rows.push_back(r);
            continue;
        }
        if (const auto outside = present & dec.free_mask; !outside.none()) {
            const auto bad = outside.ones().front();
            throw StructuralError("vertex set is not a cover: edge (row " + std::to_string(r) + ", coord " +
                                  std::to_string(bad) + ") uncovered");
        }
        dec.short_rows.push_back(r);
    }
    return dec;
}

}  // namespace kcme

#endif  // KCME_MASK_GRAPH_HPP
