#ifndef KCME_BENCH_HPP
#define KCME_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "decision.hpp"
#include "fpt_solver.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "stats.hpp"

namespace kcme {

enum class Algo { VcFpt, Brute };

inline Algo parse_algo(std::string_view name) {
    if (name == "vcfpt") return Algo::VcFpt;
    if (name == "brute") return Algo::Brute;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (expected vcfpt or brute)");
}

inline Decision solve(const Instance& inst, Algo algo, const SolverOptions& opts = {}) {
    return algo == Algo::Brute ? oracle::brute_force_solve(inst) : solve_vc_fpt(inst, opts);
}

struct BenchRow {
    std::string file;
    bool error = false;
    std::string message;
    bool feasible = false;
    StatsReport stats;
    std::uint64_t partials = 0;
    double time_ms = 0.0;
};

/// Column order of the bench CSV. Frozen: downstream plotting relies on it.
inline constexpr std::string_view bench_csv_header =
    "file,status,decision,n,m,k,d,present,vc,long_rows,cover_coords,short_rows,partials,time_ms,error";

inline BenchRow bench_one(const std::filesystem::path& path, Algo algo, const SolverOptions& opts) {
    BenchRow row;
    row.file = path.filename().string();
    try {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open file");
        const Instance inst = parse_instance(in);
        row.stats = compute_stats(inst);
        const auto start = std::chrono::steady_clock::now();
        const Decision dec = solve(inst, algo, opts);
        const auto stop = std::chrono::steady_clock::now();
        row.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        row.feasible = dec.feasible;
        row.partials = dec.stats.partials_examined;
    } catch (const std::exception& e) {
        row.error = true;
        row.message = e.what();
    }
    return row;
}

/// Solves every regular file in `dir` (non-recursive). Rows come back sorted
/// by file name whatever order the jobs finish in.
inline std::vector<BenchRow> run_bench(const std::filesystem::path& dir, Algo algo, const SolverOptions& opts = {},
                                       std::size_t jobs = 1) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

    std::vector<BenchRow> rows(files.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) rows[i] = bench_one(files[i], algo, opts);
    };
    const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, files.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

namespace detail {

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << bench_csv_header << '\n';
    for (const auto& r : rows) {
        out << detail::csv_field(r.file) << ',';
        if (r.error) {
            out << "error,,,,,,,,,,,,," << detail::csv_field(r.message) << '\n';
            continue;
        }
        const auto& s = r.stats;
        char time_buf[32];
        std::snprintf(time_buf, sizeof time_buf, "%.3f", r.time_ms);
        out << "ok," << (r.feasible ? "YES" : "NO") << ',' << s.n << ',' << s.m << ',' << s.k << ',' << s.d << ','
            << s.present << ',' << s.vc << ',' << s.long_rows << ',' << s.cover_coords << ',' << s.short_rows << ','
            << r.partials << ',' << time_buf << ",\n";
    }
}

}  // namespace kcme

#endif  // KCME_BENCH_HPP
