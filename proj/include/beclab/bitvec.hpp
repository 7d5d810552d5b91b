#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beclab {

// Bit-packed vector over GF(2).  Bits beyond size() are kept zero in the
// backing words (canonical padding), so equality is plain word equality.
// Bit order within a word is little-endian; the packing is not part of any
// file format, all I/O goes through bit-index accessors.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    static BitVec from_string(std::string_view bits);  // e.g. "10110"

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);
    void flip(std::size_t i);

    void xor_with(const BitVec& other);  // sizes must match
    void and_with(const BitVec& other);
    void clear_all();

    std::size_t popcount() const;
    bool any() const;
    // Lowest set bit index, or npos when all zero.
    std::size_t first_set() const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // parity(popcount(a AND b)); the GF(2) inner product.
    static bool dot(const BitVec& a, const BitVec& b);

    std::span<const std::uint64_t> words() const { return words_; }
    std::string to_string() const;

    std::vector<std::size_t> set_bits() const;

    bool operator==(const BitVec&) const = default;

private:
    static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }
    void check_index(std::size_t i) const;

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

inline BitVec operator^(BitVec a, const BitVec& b) {
    a.xor_with(b);
    return a;
}

}  // namespace beclab
