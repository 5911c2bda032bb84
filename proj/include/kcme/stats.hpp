#ifndef KCME_STATS_HPP
#define KCME_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "fpt_solver.hpp"
#include "mask_graph.hpp"
#include "model.hpp"

namespace kcme {

struct StatsReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t present = 0;
    std::size_t edges = 0;
    std::size_t vc = 0;
    std::size_t long_rows = 0;
    std::size_t cover_coords = 0;
    std::size_t short_rows = 0;
    std::optional<std::uint64_t> enumeration_estimate;
};

inline StatsReport compute_stats(const Instance& inst) {
    const auto g = build_graph(inst);
    const auto dec = decompose(inst, min_vertex_cover(g));
    StatsReport s;
    s.n = inst.n();
    s.m = inst.m();
    s.k = inst.k();
    s.d = inst.d();
    s.present = inst.present_count();
    s.edges = g.edge_count();
    s.vc = dec.vc();
    s.long_rows = dec.long_rows.size();
    s.cover_coords = dec.cover_coords.size();
    s.short_rows = dec.short_rows.size();
    s.enumeration_estimate = enumeration_bound(dec, inst.k());
    return s;
}

/// One "key: value" line per field.
inline std::string format_stats(const StatsReport& s) {
    std::string out;
    const auto line = [&out](const char* key, const std::string& value) {
        out += key;
        out += ": ";
        out += value;
        out += '\n';
    };
    line("n", std::to_string(s.n));
    line("m", std::to_string(s.m));
    line("k", std::to_string(s.k));
    line("d", std::to_string(s.d));
    line("present_cells", std::to_string(s.present));
    line("edges", std::to_string(s.edges));
    line("vc", std::to_string(s.vc));
    line("long_rows", std::to_string(s.long_rows));
    line("cover_coords", std::to_string(s.cover_coords));
    line("short_rows", std::to_string(s.short_rows));
    line("enumeration_estimate", s.enumeration_estimate ? std::to_string(*s.enumeration_estimate) : "overflow");
    return out;
}

}  // namespace kcme

#endif  // KCME_STATS_HPP
