// bitvec.hpp — fixed-size bit vector used for the precomputed incidence tables.
// Only the handful of operations the enumeration and counting code needs.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hq {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::int32_t nbits)
        : nbits_(nbits), words_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {}

    std::int32_t size() const { return nbits_; }

    void set(std::int32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::int32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::int32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::int32_t count() const {
        std::int32_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    // |this AND other|; both vectors must have the same size.
    std::int32_t count_and(const BitVec& other) const {
        std::int32_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & other.words_[k]);
        return c;
    }

    std::vector<std::int32_t> to_indices() const {
        std::vector<std::int32_t> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<std::int32_t>(k * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    std::vector<std::int32_t> indices_and(const BitVec& other) const {
        std::vector<std::int32_t> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k] & other.words_[k];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<std::int32_t>(k * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    std::uint64_t word(std::size_t k) const { return words_[k]; }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::int32_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hq
