#ifndef KCME_FPT_SOLVER_HPP
#define KCME_FPT_SOLVER_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bit_vector.hpp"
#include "decision.hpp"
#include "errors.hpp"
#include "mask_graph.hpp"
#include "model.hpp"
#include "nucs.hpp"

namespace kcme {

/// Decision procedure for k-center with missing entries, exponential only in
/// k and the vertex cover number of the mask graph.
///
/// Given a minimum cover S = (long rows R_S, cover coordinates C_S):
///   1. enumerate psi (all k centers restricted to C_S) and phi (a cluster
///      for every long row) such that every long row is within d on C_S;
///   2. for each used cluster, solve a non-uniform closest string instance on
///      the free coordinates with the budget each long row has left;
///   3. greedily place every short row (present entries only on C_S) in the
///      first cluster whose psi row is within d.
/// Rows with no present entries fit anywhere.

struct SolverOptions {
    bool fast_paths = true;
    /// Restrict psi to non-decreasing cluster rows. Sound because clusters
    /// are interchangeable once phi ranges over every assignment.
    bool symmetry_pruning = false;
    /// 1 = canonical single-threaded search (first witness in enumeration
    /// order). More workers split the psi range; any valid witness may win.
    std::size_t workers = 1;
};

/// phi[i] = cluster of dec.long_rows[i]; psi[j] bit i = value of cluster j at
/// dec.cover_coords[i].
struct PartialAssignment {
    std::vector<std::size_t> phi;
    std::vector<std::uint64_t> psi;
    friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;
};

/// One NUCS subproblem: the long rows phi sends to `cluster`, restricted to
/// the free coordinates, with their residual budgets.
struct ClusterTask {
    std::size_t cluster = 0;
    std::vector<std::size_t> rows;  // instance row indices
    NucsInstance nucs;
};

struct ClusterWork {
    std::vector<ClusterTask> tasks;  // ascending cluster index; only clusters phi uses
};

/// psi row (compact over cover coordinates) expanded to a length-m center
/// with zeros off the cover.
inline BitVector expand_psi_row(std::uint64_t psi_row, const CoverDecomposition& dec, std::size_t m) {
    BitVector out(m);
    for (std::size_t i = 0; i < dec.cover_coords.size(); ++i) {
        if ((psi_row >> i) & 1U) out.set(dec.cover_coords[i]);
    }
    return out;
}

/// 2^(k*|C_S|) * k^|R_S|; nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> enumeration_bound(const CoverDecomposition& dec, std::size_t k) {
    const std::size_t psi_bits = k * dec.cover_coords.size();
    if (dec.cover_coords.size() > 0 && psi_bits / dec.cover_coords.size() != k) return std::nullopt;
    if (psi_bits >= 64) return std::nullopt;
    std::uint64_t total = std::uint64_t{1} << psi_bits;
    for (std::size_t i = 0; i < dec.long_rows.size(); ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / k) return std::nullopt;
        total *= k;
    }
    return total;
}

namespace detail {

inline constexpr std::size_t max_psi_bits = 62;

inline std::size_t psi_bits_checked(const CoverDecomposition& dec, std::size_t k) {
    const std::size_t cs = dec.cover_coords.size();
    if (cs > max_psi_bits || (cs > 0 && k > max_psi_bits / cs)) {
        throw std::length_error("psi space 2^(k*|C_S|) with k=" + std::to_string(k) + ", |C_S|=" +
                                std::to_string(cs) + " is too large to enumerate");
    }
    return k * cs;
}

/// Row k of psi code q in lexicographic grid order (cluster 0, coord 0 is the
/// most significant bit).
inline void decode_psi(std::uint64_t q, std::size_t k, std::size_t cs, std::vector<std::uint64_t>& psi) {
    const std::size_t total = k * cs;
    psi.assign(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < cs; ++i) {
            psi[j] |= ((q >> (total - 1 - (j * cs + i))) & 1U) << i;
        }
    }
}

/// psi rows as lexicographic codes are non-decreasing in cluster index.
inline bool psi_sorted(std::uint64_t q, std::size_t k, std::size_t cs) {
    if (cs == 0) return true;
    const std::uint64_t row_mask = (cs >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << cs) - 1);
    const std::size_t total = k * cs;
    std::uint64_t prev = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const std::uint64_t code = (q >> (total - (j + 1) * cs)) & row_mask;
        if (j > 0 && code < prev) return false;
        prev = code;
    }
    return true;
}

struct ProjectedRow {
    std::uint64_t value = 0;
    std::uint64_t present = 0;

    [[nodiscard]] std::size_t distance(std::uint64_t psi_row) const noexcept {
        return static_cast<std::size_t>(std::popcount(present & (value ^ psi_row)));
    }
};

/// Per-instance data reused across the whole enumeration.
class CoverContext {
   public:
    CoverContext(const Instance& inst, const CoverDecomposition& dec) : inst_(inst), dec_(dec) {
        if (dec.cover_coords.size() > 64) throw std::length_error("more than 64 cover coordinates");
        long_proj_.reserve(dec.long_rows.size());
        long_residual_.reserve(dec.long_rows.size());
        for (const auto r : dec.long_rows) {
            long_proj_.push_back(project(inst.row(r)));
            PartialString residual(dec.free_coords.size());
            for (std::size_t i = 0; i < dec.free_coords.size(); ++i) residual.set(i, inst.cell(r, dec.free_coords[i]));
            long_residual_.push_back(std::move(residual));
        }
        short_proj_.reserve(dec.short_rows.size());
        for (const auto r : dec.short_rows) short_proj_.push_back(project(inst.row(r)));
    }

    [[nodiscard]] const Instance& instance() const noexcept { return inst_; }
    [[nodiscard]] const CoverDecomposition& decomposition() const noexcept { return dec_; }
    [[nodiscard]] const std::vector<ProjectedRow>& long_proj() const noexcept { return long_proj_; }
    [[nodiscard]] const std::vector<ProjectedRow>& short_proj() const noexcept { return short_proj_; }
    [[nodiscard]] const PartialString& long_residual(std::size_t i) const noexcept { return long_residual_[i]; }

    /// NUCS over the free coordinates for the long rows (by long-row index)
    /// sharing psi row `psi_row`.
    [[nodiscard]] NucsInstance cluster_nucs(const std::vector<std::size_t>& members, std::uint64_t psi_row) const {
        std::vector<PartialString> strings;
        std::vector<std::int64_t> budgets;
        strings.reserve(members.size());
        budgets.reserve(members.size());
        for (const auto i : members) {
            strings.push_back(long_residual_[i]);
            budgets.push_back(static_cast<std::int64_t>(inst_.d()) -
                              static_cast<std::int64_t>(long_proj_[i].distance(psi_row)));
        }
        return NucsInstance(dec_.free_coords.size(), std::move(strings), std::move(budgets));
    }

   private:
    [[nodiscard]] ProjectedRow project(const PartialString& row) const {
        ProjectedRow p;
        for (std::size_t i = 0; i < dec_.cover_coords.size(); ++i) {
            const Symbol s = row.at(dec_.cover_coords[i]);
            if (s != Symbol::Missing) p.present |= std::uint64_t{1} << i;
            if (s == Symbol::One) p.value |= std::uint64_t{1} << i;
        }
        return p;
    }

    const Instance& inst_;
    const CoverDecomposition& dec_;
    std::vector<ProjectedRow> long_proj_;
    std::vector<ProjectedRow> short_proj_;
    std::vector<PartialString> long_residual_;
};

inline std::optional<std::vector<std::size_t>> assign_short_rows(const std::vector<std::uint64_t>& psi,
                                                                 const CoverContext& ctx) {
    const std::size_t d = ctx.instance().d();
    std::vector<std::size_t> out;
    out.reserve(ctx.short_proj().size());
    for (const auto& row : ctx.short_proj()) {
        std::size_t j = 0;
        while (j < psi.size() && row.distance(psi[j]) > d) ++j;
        if (j == psi.size()) return std::nullopt;
        out.push_back(j);
    }
    return out;
}

/// Advances an odometer over choices[i] (last position fastest).
inline bool next_choice(std::vector<std::size_t>& pos, const std::vector<std::vector<std::size_t>>& choices) {
    for (std::size_t i = pos.size(); i-- > 0;) {
        if (++pos[i] < choices[i].size()) return true;
        pos[i] = 0;
    }
    return false;
}

}  // namespace detail

/// Visits every (phi, psi) pair once: psi outer in lexicographic order over
/// the k x |C_S| grid, phi inner in lexicographic order over long rows. The
/// visitor returns false to stop.
template <typename Visitor>
void enumerate_partial(const CoverDecomposition& dec, std::size_t k, Visitor&& visit) {
    const std::size_t cs = dec.cover_coords.size();
    const std::size_t bits = detail::psi_bits_checked(dec, k);
    std::vector<std::size_t> all_clusters(k);
    for (std::size_t j = 0; j < k; ++j) all_clusters[j] = j;
    const std::vector<std::vector<std::size_t>> choices(dec.long_rows.size(), all_clusters);

    PartialAssignment pa;
    const std::uint64_t psi_count = std::uint64_t{1} << bits;
    for (std::uint64_t q = 0; q < psi_count; ++q) {
        detail::decode_psi(q, k, cs, pa.psi);
        std::vector<std::size_t> pos(dec.long_rows.size(), 0);
        do {
            pa.phi = pos;
            if (!visit(static_cast<const PartialAssignment&>(pa))) return;
        } while (detail::next_choice(pos, choices));
    }
}

inline bool is_valid(const PartialAssignment& pa, const Instance& inst, const CoverDecomposition& dec) {
    if (pa.phi.size() != dec.long_rows.size()) return false;
    for (std::size_t i = 0; i < dec.long_rows.size(); ++i) {
        if (pa.phi[i] >= pa.psi.size()) return false;
        const BitVector center = expand_psi_row(pa.psi[pa.phi[i]], dec, inst.m());
        if (hamming_restricted(inst.row(dec.long_rows[i]), center, dec.cover_mask) > inst.d()) return false;
    }
    return true;
}

/// Per-cluster NUCS instances on the free coordinates. Requires is_valid(pa).
inline ClusterWork residual_budgets(const PartialAssignment& pa, const Instance& inst,
                                    const CoverDecomposition& dec) {
    if (!is_valid(pa, inst, dec)) throw std::logic_error("residual_budgets: partial assignment is not valid");
    const detail::CoverContext ctx(inst, dec);
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < pa.phi.size(); ++i) members[pa.phi[i]].push_back(i);
    ClusterWork work;
    for (const auto& [j, idx] : members) {
        ClusterTask task;
        task.cluster = j;
        for (const auto i : idx) task.rows.push_back(dec.long_rows[i]);
        task.nucs = ctx.cluster_nucs(idx, pa.psi[j]);
        work.tasks.push_back(std::move(task));
    }
    return work;
}

/// Smallest cluster within d on C_S for every short row (aligned with
/// dec.short_rows), or nullopt if some short row fits nowhere.
inline std::optional<std::vector<std::size_t>> assign_short_rows(const std::vector<std::uint64_t>& psi,
                                                                 const CoverDecomposition& dec,
                                                                 const Instance& inst) {
    const detail::CoverContext ctx(inst, dec);
    return detail::assign_short_rows(psi, ctx);
}

namespace detail {

struct Found {
    std::uint64_t psi_code = 0;
    PartialAssignment pa;
    std::vector<std::optional<BitVector>> free_centers;  // per cluster; set for clusters phi uses
    std::vector<std::size_t> short_assignment;
};

struct WorkerCounters {
    std::uint64_t psi_examined = 0;
    std::uint64_t partials_examined = 0;
    std::uint64_t nucs_calls = 0;
    std::uint64_t nucs_cache_hits = 0;
};

class PsiSearch {
   public:
    PsiSearch(const CoverContext& ctx, const SolverOptions& opts) : ctx_(ctx), opts_(opts) {}

    /// Examines one psi code; fills `found` and returns true on success.
    bool examine(std::uint64_t q, WorkerCounters& counters, Found& found) {
        const auto& inst = ctx_.instance();
        const std::size_t k = inst.k();
        const std::size_t cs = ctx_.decomposition().cover_coords.size();
        const std::size_t d = inst.d();
        if (opts_.symmetry_pruning && !psi_sorted(q, k, cs)) return false;
        ++counters.psi_examined;

        decode_psi(q, k, cs, psi_);
        auto shorts = assign_short_rows(psi_, ctx_);
        if (!shorts) return false;

        const auto& longs = ctx_.long_proj();
        choices_.assign(longs.size(), {});
        for (std::size_t i = 0; i < longs.size(); ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                if (longs[i].distance(psi_[j]) <= d) choices_[i].push_back(j);
            }
            if (choices_[i].empty()) return false;
        }

        memo_.clear();
        std::vector<std::size_t> pos(longs.size(), 0);
        std::vector<std::vector<std::size_t>> members(k);
        std::vector<std::optional<BitVector>> centers(k);
        do {
            ++counters.partials_examined;
            for (auto& mbr : members) mbr.clear();
            for (std::size_t i = 0; i < pos.size(); ++i) members[choices_[i][pos[i]]].push_back(i);

            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                centers[j].reset();
                if (members[j].empty()) continue;
                auto key = std::make_pair(psi_[j], members[j]);
                auto it = memo_.find(key);
                if (it != memo_.end()) {
                    ++counters.nucs_cache_hits;
                } else {
                    ++counters.nucs_calls;
                    it = memo_.emplace(std::move(key), nucs_solve(ctx_.cluster_nucs(members[j], psi_[j]))).first;
                }
                if (!it->second) {
                    ok = false;
                } else {
                    centers[j] = it->second;
                }
            }
            if (ok) {
                found.psi_code = q;
                found.pa.psi = psi_;
                found.pa.phi.resize(pos.size());
                for (std::size_t i = 0; i < pos.size(); ++i) found.pa.phi[i] = choices_[i][pos[i]];
                found.free_centers = std::move(centers);
                found.short_assignment = std::move(*shorts);
                return true;
            }
        } while (next_choice(pos, choices_));
        return false;
    }

   private:
    const CoverContext& ctx_;
    const SolverOptions& opts_;
    std::vector<std::uint64_t> psi_;
    std::vector<std::vector<std::size_t>> choices_;
    std::map<std::pair<std::uint64_t, std::vector<std::size_t>>, std::optional<BitVector>> memo_;
};

inline Solution assemble_witness(const Instance& inst, const CoverDecomposition& dec, const Found& found) {
    Solution sol;
    sol.centers.reserve(inst.k());
    for (std::size_t j = 0; j < inst.k(); ++j) {
        BitVector center = expand_psi_row(found.pa.psi[j], dec, inst.m());
        if (found.free_centers[j]) {
            const auto& free = *found.free_centers[j];
            for (std::size_t i = 0; i < dec.free_coords.size(); ++i) {
                if (free.test(i)) center.set(dec.free_coords[i]);
            }
        }
        sol.centers.push_back(std::move(center));
    }
    sol.assignment.assign(inst.n(), 0);
    for (std::size_t i = 0; i < dec.long_rows.size(); ++i) sol.assignment[dec.long_rows[i]] = found.pa.phi[i];
    for (std::size_t i = 0; i < dec.short_rows.size(); ++i) {
        sol.assignment[dec.short_rows[i]] = found.short_assignment[i];
    }
    return sol;
}

inline void check_witness(const Instance& inst, const Solution& sol) {
    if (!verify_solution(inst, sol).ok()) throw std::logic_error("solver produced a witness that fails verification");
}

inline std::optional<Decision> try_fast_paths(const Instance& inst) {
    Decision dec;
    dec.feasible = true;
    Solution sol;
    if (inst.d() >= inst.m()) {
        dec.stats.fast_path = FastPath::RadiusCoversLength;
        sol.centers.assign(inst.k(), BitVector(inst.m()));
        sol.assignment.assign(inst.n(), 0);
    } else if (inst.k() >= inst.n()) {
        dec.stats.fast_path = FastPath::SingletonClusters;
        sol.centers.assign(inst.k(), BitVector(inst.m()));
        sol.assignment.resize(inst.n());
        for (std::size_t r = 0; r < inst.n(); ++r) {
            sol.centers[r] = inst.row(r).value();
            sol.assignment[r] = r;
        }
    } else {
        return std::nullopt;
    }
    check_witness(inst, sol);
    dec.witness = std::move(sol);
    return dec;
}

}  // namespace detail

/// Yes iff the rows split into k clusters of radius <= d; on Yes the witness
/// passes verify_solution. Throws std::length_error if 2^(k*|C_S|) does not
/// fit the enumerator.
inline Decision solve_vc_fpt(const Instance& inst, const SolverOptions& opts = {}) {
    if (opts.fast_paths) {
        if (auto fast = detail::try_fast_paths(inst)) return *fast;
    }

    const auto graph = build_graph(inst);
    const auto dec = decompose(inst, min_vertex_cover(graph));

    Decision result;
    auto& stats = result.stats;
    stats.vc = dec.vc();
    stats.long_rows = dec.long_rows.size();
    stats.cover_coords = dec.cover_coords.size();
    stats.short_rows = dec.short_rows.size();
    stats.empty_rows = dec.empty_rows.size();
    stats.enumeration_bound = enumeration_bound(dec, inst.k());

    const std::size_t bits = detail::psi_bits_checked(dec, inst.k());
    const std::uint64_t psi_count = std::uint64_t{1} << bits;
    const detail::CoverContext ctx(inst, dec);

    std::optional<detail::Found> found;
    detail::WorkerCounters totals;
    const std::size_t workers = std::max<std::size_t>(1, opts.workers);

    if (workers == 1) {
        detail::PsiSearch search(ctx, opts);
        detail::Found candidate;
        for (std::uint64_t q = 0; q < psi_count; ++q) {
            if (search.examine(q, totals, candidate)) {
                found = std::move(candidate);
                break;
            }
        }
    } else {
        constexpr std::uint64_t chunk = 64;
        std::atomic<std::uint64_t> next{0};
        std::atomic<bool> stop{false};
        std::mutex lock;
        std::vector<std::thread> pool;
        std::vector<detail::WorkerCounters> counters(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                detail::PsiSearch search(ctx, opts);
                detail::Found candidate;
                while (!stop.load(std::memory_order_relaxed)) {
                    const std::uint64_t begin = next.fetch_add(chunk);
                    if (begin >= psi_count) break;
                    const std::uint64_t end = std::min(psi_count, begin + chunk);
                    for (std::uint64_t q = begin; q < end && !stop.load(std::memory_order_relaxed); ++q) {
                        if (search.examine(q, counters[w], candidate)) {
                            const std::lock_guard guard(lock);
                            if (!found || candidate.psi_code < found->psi_code) found = std::move(candidate);
                            stop = true;
                            break;
                        }
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& c : counters) {
            totals.psi_examined += c.psi_examined;
            totals.partials_examined += c.partials_examined;
            totals.nucs_calls += c.nucs_calls;
            totals.nucs_cache_hits += c.nucs_cache_hits;
        }
    }

    stats.psi_examined = totals.psi_examined;
    stats.partials_examined = totals.partials_examined;
    stats.nucs_calls = totals.nucs_calls;
    stats.nucs_cache_hits = totals.nucs_cache_hits;

    if (found) {
        result.feasible = true;
        result.witness = detail::assemble_witness(inst, dec, *found);
        detail::check_witness(inst, *result.witness);
    }
    return result;
}

}  // namespace kcme

#endif  // KCME_FPT_SOLVER_HPP
