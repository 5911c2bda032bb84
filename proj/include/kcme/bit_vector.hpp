#ifndef KCME_BIT_VECTOR_HPP
#define KCME_BIT_VECTOR_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kcme {

/// Fixed-length bit string packed into 64-bit words.
///
/// Bits past size() in the last word are kept at zero so that word-wise
/// popcounts never see garbage.
class BitVector {
   public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;

    explicit BitVector(std::size_t size, bool fill = false)
        : size_(size), words_(word_count(size), fill ? ~word_type{0} : word_type{0}) {
        trim();
    }

    /// Parses a string over {'0','1'}; any other character reads as 0.
    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') v.set(i);
        }
        return v;
    }

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

    [[nodiscard]] bool test(std::size_t i) const noexcept {
        assert(i < size_);
        return (words_[i / word_bits] >> (i % word_bits)) & 1U;
    }

    void set(std::size_t i, bool value = true) noexcept {
        assert(i < size_);
        const word_type bit = word_type{1} << (i % word_bits);
        if (value) {
            words_[i / word_bits] |= bit;
        } else {
            words_[i / word_bits] &= ~bit;
        }
    }

    void reset(std::size_t i) noexcept { set(i, false); }

    [[nodiscard]] std::size_t count() const noexcept {
        std::size_t total = 0;
        for (const word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    [[nodiscard]] bool none() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }

    [[nodiscard]] std::span<const word_type> words() const noexcept { return words_; }

    /// Indices of set bits in increasing order.
    [[nodiscard]] std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_type word = words_[w];
            while (word != 0) {
                out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i) {
            if (test(i)) s[i] = '1';
        }
        return s;
    }

    BitVector& operator&=(const BitVector& o) noexcept {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    BitVector& operator|=(const BitVector& o) noexcept {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    BitVector& operator^=(const BitVector& o) noexcept {
        assert(size_ == o.size_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    [[nodiscard]] BitVector operator~() const {
        BitVector out = *this;
        for (auto& w : out.words_) w = ~w;
        out.trim();
        return out;
    }

    friend BitVector operator&(BitVector a, const BitVector& b) noexcept { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) noexcept { return a |= b; }
    friend BitVector operator^(BitVector a, const BitVector& b) noexcept { return a ^= b; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// Orders by the '0'/'1' string representation (index 0 most significant).
    friend bool lex_less(const BitVector& a, const BitVector& b) { return a.to_string() < b.to_string(); }

   private:
    static constexpr std::size_t word_count(std::size_t bits) noexcept {
        return (bits + word_bits - 1) / word_bits;
    }

    void trim() noexcept {
        if (size_ % word_bits != 0 && !words_.empty()) {
            words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
        }
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

/// popcount(a & b & c) without materialising temporaries.
inline std::size_t count_and3(const BitVector& a, const BitVector& b, const BitVector& c) noexcept {
    assert(a.size() == b.size() && b.size() == c.size());
    const auto wa = a.words();
    const auto wb = b.words();
    const auto wc = c.words();
    std::size_t total = 0;
    for (std::size_t w = 0; w < wa.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(wa[w] & wb[w] & wc[w]));
    }
    return total;
}

/// Builds a length-`size` mask with the given indices set.
inline BitVector make_mask(std::size_t size, std::span<const std::size_t> indices) {
    BitVector v(size);
    for (const std::size_t i : indices) v.set(i);
    return v;
}

}  // namespace kcme

#endif  // KCME_BIT_VECTOR_HPP
