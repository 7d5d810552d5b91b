#include "beclab/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace beclab {

void BitVec::check_index(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("BitVec index " + std::to_string(i) + " >= len " + std::to_string(len_));
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVec::from_string: bad character");
    }
    return v;
}

bool BitVec::get(std::size_t i) const {
    check_index(i);
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void BitVec::set(std::size_t i, bool v) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

void BitVec::flip(std::size_t i) {
    check_index(i);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

void BitVec::xor_with(const BitVec& other) {
    if (other.len_ != len_) throw std::invalid_argument("BitVec::xor_with: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

void BitVec::and_with(const BitVec& other) {
    if (other.len_ != len_) throw std::invalid_argument("BitVec::and_with: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
}

void BitVec::clear_all() {
    for (auto& w : words_) w = 0;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVec::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return npos;
}

bool BitVec::dot(const BitVec& a, const BitVec& b) {
    if (a.len_ != b.len_) throw std::invalid_argument("BitVec::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) acc ^= a.words_[w] & b.words_[w];
    return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::vector<std::size_t> BitVec::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            const int b = std::countr_zero(word);
            out.push_back(w * 64 + static_cast<std::size_t>(b));
            word &= word - 1;
        }
    }
    return out;
}

}  // namespace beclab
