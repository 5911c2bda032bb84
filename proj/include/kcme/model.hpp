#ifndef KCME_MODEL_HPP
#define KCME_MODEL_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bit_vector.hpp"
#include "errors.hpp"

namespace kcme {

/// Cell symbol. The numeric order Zero < One < Missing is relied upon for
/// canonical orderings.
enum class Symbol : std::uint8_t { Zero = 0, One = 1, Missing = 2 };

inline char to_char(Symbol s) noexcept {
    switch (s) {
        case Symbol::Zero: return '0';
        case Symbol::One: return '1';
        default: return '?';
    }
}

/// A string over {0,1,?}: value bits plus presence bits. Value bits are zero
/// wherever presence is zero.
class PartialString {
   public:
    PartialString() = default;
    explicit PartialString(std::size_t size) : value_(size), present_(size) {}
    PartialString(BitVector value, BitVector present) : value_(std::move(value)), present_(std::move(present)) {
        if (value_.size() != present_.size()) throw StructuralError("value/presence length mismatch");
        value_ &= present_;
    }

    /// Characters other than '0', '1', '?' throw StructuralError.
    static PartialString from_string(std::string_view text) {
        PartialString s(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
                case '0': s.present_.set(i); break;
                case '1':
                    s.present_.set(i);
                    s.value_.set(i);
                    break;
                case '?': break;
                default:
                    throw StructuralError(std::string("illegal character '") + text[i] + "' at column " +
                                          std::to_string(i + 1));
            }
        }
        return s;
    }

    [[nodiscard]] std::size_t size() const noexcept { return value_.size(); }

    [[nodiscard]] Symbol at(std::size_t i) const noexcept {
        if (!present_.test(i)) return Symbol::Missing;
        return value_.test(i) ? Symbol::One : Symbol::Zero;
    }

    void set(std::size_t i, Symbol s) noexcept {
        present_.set(i, s != Symbol::Missing);
        value_.set(i, s == Symbol::One);
    }

    [[nodiscard]] const BitVector& value() const noexcept { return value_; }
    [[nodiscard]] const BitVector& present() const noexcept { return present_; }
    [[nodiscard]] std::size_t present_count() const noexcept { return present_.count(); }

    [[nodiscard]] std::string to_string() const {
        std::string out(size(), '?');
        for (std::size_t i = 0; i < size(); ++i) out[i] = to_char(at(i));
        return out;
    }

    friend bool operator==(const PartialString&, const PartialString&) = default;

   private:
    BitVector value_;
    BitVector present_;
};

/// Presence indicator derived from an Instance; bit (i,j) set iff cell (i,j)
/// is not Missing.
class Mask {
   public:
    explicit Mask(std::vector<BitVector> rows) : rows_(std::move(rows)) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
    [[nodiscard]] bool at(std::size_t i, std::size_t j) const noexcept { return rows_[i].test(j); }
    [[nodiscard]] const BitVector& row(std::size_t i) const noexcept { return rows_[i]; }

   private:
    std::vector<BitVector> rows_;
};

/// A k-center instance over {0,1,?}: n rows of length m, cluster budget k,
/// radius budget d. Immutable after construction.
class Instance {
   public:
    Instance(std::size_t k, std::size_t d, std::vector<PartialString> rows) : k_(k), d_(d), rows_(std::move(rows)) {
        if (k_ < 1) throw StructuralError("k must be at least 1");
        if (rows_.empty()) throw StructuralError("instance needs at least one row");
        m_ = rows_.front().size();
        if (m_ < 1) throw StructuralError("instance needs at least one coordinate");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].size() != m_) {
                throw StructuralError("row " + std::to_string(i) + " has length " +
                                      std::to_string(rows_[i].size()) + ", expected " + std::to_string(m_));
            }
        }
    }

    static Instance from_rows(std::size_t k, std::size_t d, const std::vector<std::string>& rows) {
        std::vector<PartialString> parsed;
        parsed.reserve(rows.size());
        for (const auto& r : rows) parsed.push_back(PartialString::from_string(r));
        return Instance(k, d, std::move(parsed));
    }

    [[nodiscard]] std::size_t n() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] std::size_t k() const noexcept { return k_; }
    [[nodiscard]] std::size_t d() const noexcept { return d_; }

    [[nodiscard]] const PartialString& row(std::size_t i) const noexcept { return rows_[i]; }
    [[nodiscard]] const std::vector<PartialString>& rows() const noexcept { return rows_; }
    [[nodiscard]] Symbol cell(std::size_t i, std::size_t j) const noexcept { return rows_[i].at(j); }

    [[nodiscard]] Mask mask() const {
        std::vector<BitVector> bits;
        bits.reserve(rows_.size());
        for (const auto& r : rows_) bits.push_back(r.present());
        return Mask(std::move(bits));
    }

    [[nodiscard]] std::size_t present_count() const noexcept {
        std::size_t total = 0;
        for (const auto& r : rows_) total += r.present_count();
        return total;
    }

    /// Same matrix with different budgets.
    [[nodiscard]] Instance with_budgets(std::size_t k, std::size_t d) const { return Instance(k, d, rows_); }

   private:
    std::size_t k_;
    std::size_t d_;
    std::size_t m_ = 0;
    std::vector<PartialString> rows_;
};

/// k binary centers of length m and a 0-based row -> cluster assignment.
struct Solution {
    std::vector<BitVector> centers;
    std::vector<std::size_t> assignment;
};

/// Hamming distance between a partial row and a binary center counted only on
/// `coords`; Missing positions of the row contribute nothing.
inline std::size_t hamming_restricted(const PartialString& row, const BitVector& center, const BitVector& coords) {
    if (row.size() != center.size() || row.size() != coords.size()) {
        throw StructuralError("hamming_restricted: length mismatch");
    }
    const auto val = row.value().words();
    const auto pres = row.present().words();
    const auto cen = center.words();
    const auto crd = coords.words();
    std::size_t total = 0;
    for (std::size_t w = 0; w < val.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(pres[w] & (val[w] ^ cen[w]) & crd[w]));
    }
    return total;
}

/// Distance over all coordinates.
inline std::size_t hamming_restricted(const PartialString& row, const BitVector& center) {
    return hamming_restricted(row, center, BitVector(row.size(), true));
}

struct Violation {
    std::size_t row;
    std::size_t distance;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
    std::vector<Violation> violations;
    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// Checks every row against its assigned center over [m]. Shape problems
/// (wrong center count/length, bad cluster index, missing rows) throw
/// StructuralError; distance violations are reported in the Verdict.
inline Verdict verify_solution(const Instance& inst, const Solution& sol) {
    if (sol.centers.size() != inst.k()) {
        throw StructuralError("solution has " + std::to_string(sol.centers.size()) + " centers, expected " +
                              std::to_string(inst.k()));
    }
    for (std::size_t j = 0; j < sol.centers.size(); ++j) {
        if (sol.centers[j].size() != inst.m()) {
            throw StructuralError("center " + std::to_string(j + 1) + " has length " +
                                  std::to_string(sol.centers[j].size()) + ", expected " + std::to_string(inst.m()));
        }
    }
    if (sol.assignment.size() != inst.n()) {
        throw StructuralError("assignment covers " + std::to_string(sol.assignment.size()) + " rows, expected " +
                              std::to_string(inst.n()));
    }
    Verdict verdict;
    for (std::size_t r = 0; r < inst.n(); ++r) {
        const std::size_t j = sol.assignment[r];
        if (j >= inst.k()) {
            throw StructuralError("row " + std::to_string(r) + " assigned to cluster " + std::to_string(j + 1) +
                                  " outside [1, " + std::to_string(inst.k()) + "]");
        }
        const std::size_t dist = hamming_restricted(inst.row(r), sol.centers[j]);
        if (dist > inst.d()) verdict.violations.push_back({r, dist});
    }
    return verdict;
}

}  // namespace kcme

#endif  // KCME_MODEL_HPP
