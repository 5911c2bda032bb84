#ifndef KCME_NUCS_HPP
#define KCME_NUCS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bit_vector.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "model.hpp"

namespace kcme {

/// Non-uniform closest string: find one binary center within budgets[i] of
/// strings[i] for every i.
struct NucsInstance {
    std::size_t length = 0;
    std::vector<PartialString> strings;
    std::vector<std::int64_t> budgets;

    NucsInstance() = default;
    NucsInstance(std::size_t len, std::vector<PartialString> strs, std::vector<std::int64_t> buds)
        : length(len), strings(std::move(strs)), budgets(std::move(buds)) {
        if (strings.size() != budgets.size()) throw StructuralError("NUCS: budgets.size() != strings.size()");
        for (const auto& s : strings) {
            if (s.size() != length) throw StructuralError("NUCS: string length mismatch");
        }
    }

    static NucsInstance from_strings(const std::vector<std::string>& strs, std::vector<std::int64_t> buds) {
        std::vector<PartialString> parsed;
        for (const auto& s : strs) parsed.push_back(PartialString::from_string(s));
        const std::size_t len = strs.empty() ? 0 : strs.front().size();
        return NucsInstance(len, std::move(parsed), std::move(buds));
    }

    [[nodiscard]] std::size_t p() const noexcept { return strings.size(); }
};

using ColumnType = std::vector<Symbol>;

/// Columns grouped by the symbol vector they show across the p strings.
/// Types are in lexicographic order with Zero < One < Missing.
struct ColumnTypeProfile {
    std::vector<ColumnType> types;
    std::vector<std::size_t> counts;
    std::vector<std::vector<std::size_t>> positions;
};

inline ColumnTypeProfile column_types(const NucsInstance& inst) {
    std::map<ColumnType, std::vector<std::size_t>> groups;
    ColumnType type(inst.p());
    for (std::size_t col = 0; col < inst.length; ++col) {
        for (std::size_t i = 0; i < inst.p(); ++i) type[i] = inst.strings[i].at(col);
        groups[type].push_back(col);
    }
    ColumnTypeProfile profile;
    for (auto& [t, pos] : groups) {
        profile.types.push_back(t);
        profile.counts.push_back(pos.size());
        profile.positions.push_back(std::move(pos));
    }
    return profile;
}

/// Bounded integer system  sum_t coeffs[i][t] * x_t <= rhs[i],  0 <= x_t <= upper[t],
/// with coefficients in {-1, 0, +1}.
///
/// For NUCS, x_t is the number of columns of type t where the center is One;
/// string i pays x_t on types where it reads Zero and (n_t - x_t) where it
/// reads One. Constants are moved to the right-hand side.
struct IlpSystem {
    std::vector<std::int64_t> upper;
    std::vector<std::vector<std::int8_t>> coeffs;
    std::vector<std::int64_t> rhs;

    [[nodiscard]] std::size_t variable_count() const noexcept { return upper.size(); }
    [[nodiscard]] std::size_t constraint_count() const noexcept { return rhs.size(); }

    [[nodiscard]] bool satisfied_by(const std::vector<std::int64_t>& x) const {
        if (x.size() != upper.size()) return false;
        for (std::size_t t = 0; t < x.size(); ++t) {
            if (x[t] < 0 || x[t] > upper[t]) return false;
        }
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            std::int64_t lhs = 0;
            for (std::size_t t = 0; t < x.size(); ++t) lhs += coeffs[i][t] * x[t];
            if (lhs > rhs[i]) return false;
        }
        return true;
    }
};

inline IlpSystem build_ilp(const NucsInstance& inst, const ColumnTypeProfile& profile) {
    IlpSystem sys;
    const std::size_t vars = profile.types.size();
    sys.upper.reserve(vars);
    for (const auto c : profile.counts) sys.upper.push_back(static_cast<std::int64_t>(c));
    sys.coeffs.assign(inst.p(), std::vector<std::int8_t>(vars, 0));
    sys.rhs.resize(inst.p());
    for (std::size_t i = 0; i < inst.p(); ++i) {
        std::int64_t rhs = inst.budgets[i];
        for (std::size_t t = 0; t < vars; ++t) {
            switch (profile.types[t][i]) {
                case Symbol::Zero: sys.coeffs[i][t] = 1; break;
                case Symbol::One:
                    sys.coeffs[i][t] = -1;
                    rhs -= sys.upper[t];
                    break;
                case Symbol::Missing: break;
            }
        }
        sys.rhs[i] = rhs;
    }
    return sys;
}

namespace detail {

struct SlackHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
        std::size_t h = v.size();
        for (const auto x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

class IlpSearch {
   public:
    explicit IlpSearch(const IlpSystem& sys)
        : sys_(sys),
          vars_(sys.variable_count()),
          cons_(sys.constraint_count()),
          suffix_min_(cons_, std::vector<std::int64_t>(vars_ + 1, 0)),
          suffix_max_(cons_, std::vector<std::int64_t>(vars_ + 1, 0)),
          failed_(vars_ + 1),
          x_(vars_, 0) {
        for (std::size_t i = 0; i < cons_; ++i) {
            for (std::size_t t = vars_; t-- > 0;) {
                const std::int64_t hi = sys_.coeffs[i][t] * sys_.upper[t];
                suffix_min_[i][t] = suffix_min_[i][t + 1] + std::min<std::int64_t>(0, hi);
                suffix_max_[i][t] = suffix_max_[i][t + 1] + std::max<std::int64_t>(0, hi);
            }
        }
    }

    std::optional<std::vector<std::int64_t>> run() {
        std::vector<std::int64_t> slack = sys_.rhs;
        if (dfs(0, slack)) return x_;
        return std::nullopt;
    }

   private:
    // slack[i] = rhs[i] - (contribution of x_0..x_{t-1}).
    bool dfs(std::size_t t, std::vector<std::int64_t>& slack) {
        for (std::size_t i = 0; i < cons_; ++i) {
            if (slack[i] < suffix_min_[i][t]) return false;
        }
        if (t == vars_) return true;

        // Slack beyond what the suffix can consume is equivalent to "unbounded".
        std::vector<std::int64_t> key(cons_);
        for (std::size_t i = 0; i < cons_; ++i) key[i] = std::min(slack[i], suffix_max_[i][t]);
        if (failed_[t].contains(key)) return false;

        std::int64_t lo = 0;
        std::int64_t hi = sys_.upper[t];
        for (std::size_t i = 0; i < cons_; ++i) {
            const auto c = sys_.coeffs[i][t];
            if (c > 0) {
                hi = std::min(hi, slack[i] - suffix_min_[i][t + 1]);
            } else if (c < 0) {
                lo = std::max(lo, suffix_min_[i][t + 1] - slack[i]);
            }
        }
        for (std::int64_t v = lo; v <= hi; ++v) {
            for (std::size_t i = 0; i < cons_; ++i) slack[i] -= sys_.coeffs[i][t] * v;
            x_[t] = v;
            const bool ok = dfs(t + 1, slack);
            for (std::size_t i = 0; i < cons_; ++i) slack[i] += sys_.coeffs[i][t] * v;
            if (ok) return true;
        }
        failed_[t].insert(std::move(key));
        return false;
    }

    const IlpSystem& sys_;
    std::size_t vars_;
    std::size_t cons_;
    std::vector<std::vector<std::int64_t>> suffix_min_;
    std::vector<std::vector<std::int64_t>> suffix_max_;
    std::vector<std::unordered_set<std::vector<std::int64_t>, SlackHash>> failed_;
    std::vector<std::int64_t> x_;
};

}  // namespace detail

/// Lexicographically smallest feasible point (in variable order), or nullopt.
///
/// Depth-first over variables in order, values ascending. Each node narrows
/// the current variable's interval from every constraint's best-case suffix
/// and records failed (depth, clamped slack) states, so the search visits at
/// most prod_i (budget_i + 1) states per depth for NUCS systems.
inline std::optional<std::vector<std::int64_t>> ilp_feasible(const IlpSystem& sys) {
    return detail::IlpSearch(sys).run();
}

/// Center with x_t Ones placed on the first x_t columns of each type t.
inline BitVector reconstruct_center(const ColumnTypeProfile& profile, const std::vector<std::int64_t>& x,
                                    std::size_t length) {
    if (x.size() != profile.types.size()) throw StructuralError("reconstruct_center: assignment size mismatch");
    BitVector center(length);
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (x[t] < 0 || static_cast<std::size_t>(x[t]) > profile.counts[t]) {
            throw StructuralError("reconstruct_center: value outside variable domain");
        }
        for (std::size_t i = 0; i < static_cast<std::size_t>(x[t]); ++i) center.set(profile.positions[t][i]);
    }
    return center;
}

inline BitVector reconstruct_center(const ColumnTypeProfile& profile, const std::vector<std::int64_t>& x) {
    std::size_t length = 0;
    for (const auto c : profile.counts) length += c;
    return reconstruct_center(profile, x, length);
}

inline std::optional<BitVector> nucs_solve(const NucsInstance& inst) {
    if (inst.p() == 0) return BitVector(inst.length);
    const auto profile = column_types(inst);
    const auto sys = build_ilp(inst, profile);
    const auto x = ilp_feasible(sys);
    if (!x) return std::nullopt;
    return reconstruct_center(profile, *x, inst.length);
}

/// Reads the standalone NUCS format: "p len", then the p budgets on one line,
/// then p strings over {0,1,?}. The budget line is omitted when p = 0 and the
/// string lines are omitted when len = 0.
inline NucsInstance parse_nucs(std::istream& in) {
    detail::LineReader reader(in);
    const auto header = detail::require_ints(reader, 2, "'p len'");
    const auto p = static_cast<std::size_t>(header[0]);
    const auto len = static_cast<std::size_t>(header[1]);
    std::vector<std::int64_t> budgets;
    if (p > 0) {
        const auto line = detail::require_line(reader, "budget line");
        for (const auto b : detail::parse_integers(line)) budgets.push_back(b);
        if (budgets.size() != p) {
            throw ParseError(line.number, "expected " + std::to_string(p) + " budgets, got " +
                                              std::to_string(budgets.size()));
        }
    }
    std::vector<PartialString> strings;
    for (std::size_t i = 0; i < p; ++i) {
        if (len == 0) {
            strings.emplace_back(0);
            continue;
        }
        const auto line = detail::require_line(reader, "a string");
        if (line.text.size() != len) {
            throw ParseError(line.number, "string length " + std::to_string(line.text.size()) + " != len = " +
                                              std::to_string(len));
        }
        for (const char c : line.text) {
            if (c != '0' && c != '1' && c != '?') throw ParseError(line.number, std::string("illegal character '") + c + "'");
        }
        strings.push_back(PartialString::from_string(line.text));
    }
    if (const auto extra = reader.next()) throw ParseError(extra->number, "string count exceeds p");
    return NucsInstance(len, std::move(strings), std::move(budgets));
}

inline NucsInstance parse_nucs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_nucs(in);
}

inline std::string serialize_nucs(const NucsInstance& inst) {
    std::string out = std::to_string(inst.p()) + ' ' + std::to_string(inst.length) + '\n';
    if (inst.p() > 0) {
        for (std::size_t i = 0; i < inst.p(); ++i) {
            if (i != 0) out += ' ';
            out += std::to_string(inst.budgets[i]);
        }
        out += '\n';
    }
    if (inst.length > 0) {
        for (const auto& s : inst.strings) out += s.to_string() + '\n';
    }
    return out;
}

}  // namespace kcme

#endif  // KCME_NUCS_HPP
