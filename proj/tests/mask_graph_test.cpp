#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "kcme/mask_graph.hpp"
#include "kcme/oracle.hpp"
#include "test_support.hpp"

using namespace kcme;

namespace {

MaskGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices, double density) {
    const std::size_t rows = rng() % (max_vertices + 1);
    const std::size_t coords = rng() % (max_vertices - rows + 1);
    std::bernoulli_distribution edge(density);
    std::vector<MaskGraph::Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < coords; ++c) {
            if (edge(rng)) edges.emplace_back(r, c);
        }
    }
    return MaskGraph(rows, coords, edges);
}

}  // namespace

TEST(BuildGraph, EdgesArePresentCells) {
    const auto g = build_graph(Instance::from_rows(1, 0, {"01?", "?10"}));
    const std::vector<MaskGraph::Edge> expected{{0, 0}, {0, 1}, {1, 1}, {1, 2}};
    EXPECT_EQ(g.edges(), expected);
    EXPECT_EQ(g.edge_count(), 4U);
}

TEST(BuildGraph, AllMissingKeepsIsolatedVertices) {
    const auto g = build_graph(Instance::from_rows(1, 0, {"???", "???", "???"}));
    EXPECT_EQ(g.edge_count(), 0U);
    EXPECT_EQ(g.row_count(), 3U);
    EXPECT_EQ(g.coord_count(), 3U);
}

TEST(BuildGraph, FullyPresentIsCompleteBipartite) {
    const auto g = build_graph(Instance::from_rows(1, 0, {"01", "10"}));
    EXPECT_EQ(g.edge_count(), 4U);
    EXPECT_EQ(min_vertex_cover(g).size(), 2U);
}

TEST(MinVertexCover, Examples) {
    EXPECT_EQ(min_vertex_cover(MaskGraph(3, 3)).size(), 0U);

    const MaskGraph star(1, 3, {{0, 0}, {0, 1}, {0, 2}});
    EXPECT_EQ(min_vertex_cover(star), (VertexSet{{0}, {}}));

    // Minimum 2, confirmed by subset search.
    const MaskGraph path(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    const auto cover = min_vertex_cover(path);
    EXPECT_EQ(cover.size(), 2U);
    EXPECT_EQ(oracle::brute_force_vc(path).size(), 2U);
    EXPECT_TRUE(covers(path, cover));
}

TEST(MinVertexCover, DeterministicForFixedInput) {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 50; ++it) {
        const auto g = random_graph(rng, 30, 0.3);
        EXPECT_EQ(min_vertex_cover(g), min_vertex_cover(g));
    }
}

TEST(MinVertexCover, MatchesBruteForceAndKoenig) {
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 400; ++it) {
        const auto g = random_graph(rng, 16, 0.1 + 0.1 * static_cast<double>(it % 7));
        const auto cover = min_vertex_cover(g);
        EXPECT_TRUE(covers(g, cover));
        EXPECT_EQ(cover.size(), oracle::brute_force_vc(g).size());
        EXPECT_EQ(cover.size(), maximum_matching(g).size);
    }
}

TEST(MinVertexCover, LargerGraphsStayConsistent) {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 30; ++it) {
        const auto g = random_graph(rng, 400, 0.02);
        const auto mt = maximum_matching(g);
        const auto cover = min_vertex_cover(g);
        EXPECT_TRUE(covers(g, cover));
        EXPECT_EQ(cover.size(), mt.size);
        for (std::size_t r = 0; r < g.row_count(); ++r) {
            if (mt.row_mate[r] != Matching::none) { EXPECT_EQ(mt.coord_mate[mt.row_mate[r]], r); }
        }
    }
}

TEST(MinVertexCover, RemovingEdgesNeverIncreasesCover) {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 100; ++it) {
        auto inst = support::random_instance(rng, 1 + rng() % 8, 1 + rng() % 8, 1, 0, 0.4);
        const auto before = min_vertex_cover(build_graph(inst)).size();
        std::vector<std::string> rows;
        for (const auto& r : inst.rows()) rows.push_back(r.to_string());
        rows[rng() % rows.size()][rng() % inst.m()] = '?';
        const auto after = min_vertex_cover(build_graph(Instance::from_rows(1, 0, rows))).size();
        EXPECT_LE(after, before);
    }
}

TEST(Decompose, RejectsNonCover) {
    const auto inst = Instance::from_rows(1, 0, {"01?", "?10"});
    EXPECT_THROW(decompose(inst, VertexSet{{0}, {1}}), StructuralError);
}

TEST(Decompose, SplitsRowsAndCoordinates) {
    const auto inst = Instance::from_rows(1, 0, {"01?", "?1?"});
    const auto dec = decompose(inst, VertexSet{{0}, {1}});
    EXPECT_EQ(dec.long_rows, std::vector<std::size_t>{0});
    EXPECT_EQ(dec.cover_coords, std::vector<std::size_t>{1});
    EXPECT_EQ(dec.short_rows, std::vector<std::size_t>{1});
    EXPECT_EQ(dec.free_coords, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(dec.vc(), 2U);
}

TEST(Decompose, AllMissing) {
    const auto inst = Instance::from_rows(1, 0, {"???", "???", "???"});
    const auto dec = decompose(inst, VertexSet{});
    EXPECT_TRUE(dec.long_rows.empty());
    EXPECT_TRUE(dec.cover_coords.empty());
    EXPECT_TRUE(dec.short_rows.empty());
    EXPECT_EQ(dec.empty_rows.size(), 3U);
}

TEST(Decompose, ShortRowsWhosePresentEntriesAreAllZeroStillCount) {
    // A short row reading only Zero on C_S can still be far from a center.
    const auto inst = Instance::from_rows(1, 0, {"1111", "00??"});
    const auto dec = decompose(inst, VertexSet{{0}, {0, 1}});
    EXPECT_EQ(dec.short_rows, std::vector<std::size_t>{1});
}

TEST(Decompose, OutsideBlockIsMissing) {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 200; ++it) {
        const auto inst = support::random_instance(rng, 1 + rng() % 10, 1 + rng() % 10, 1, 0,
                                                   0.3 + 0.6 * (it % 3) / 2.0);
        const auto dec = decompose(inst, min_vertex_cover(build_graph(inst)));
        for (const auto r : dec.short_rows) {
            for (const auto c : dec.free_coords) EXPECT_EQ(inst.cell(r, c), Symbol::Missing);
            EXPECT_GT(inst.row(r).present_count(), 0U);
        }
        for (const auto r : dec.empty_rows) EXPECT_EQ(inst.row(r).present_count(), 0U);
        EXPECT_EQ(dec.long_rows.size() + dec.short_rows.size() + dec.empty_rows.size(), inst.n());
    }
}
