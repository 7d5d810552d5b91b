#include "beclab/gf2poly.hpp"

#include <bit>
#include <stdexcept>

namespace beclab {

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::from_support(const std::vector<unsigned>& exponents) {
    Gf2Poly p;
    for (unsigned e : exponents) p.set_coeff(e, !p.coeff(e));
    return p;
}

Gf2Poly Gf2Poly::from_support(std::initializer_list<unsigned> exponents) {
    return from_support(std::vector<unsigned>(exponents));
}

Gf2Poly Gf2Poly::xn_plus_1(unsigned n) {
    Gf2Poly p;
    p.set_coeff(0, true);
    p.set_coeff(n, true);
    return p;
}

int Gf2Poly::degree() const {
    if (words_.empty()) return -1;
    const std::size_t w = words_.size() - 1;
    return static_cast<int>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w])));
}

bool Gf2Poly::coeff(unsigned i) const {
    const std::size_t w = i / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % 64)) & 1u;
}

void Gf2Poly::set_coeff(unsigned i, bool v) {
    const std::size_t w = i / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
    trim();
}

std::size_t Gf2Poly::weight() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<unsigned> Gf2Poly::support() const {
    std::vector<unsigned> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            out.push_back(static_cast<unsigned>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
            word &= word - 1;
        }
    }
    return out;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (std::size_t i = 0; i < r.words_.size(); ++i) {
        std::uint64_t w = 0;
        if (i < words_.size()) w ^= words_[i];
        if (i < o.words_.size()) w ^= o.words_[i];
        r.words_[i] = w;
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return Gf2Poly();
    Gf2Poly r;
    r.words_.resize(words_.size() + o.words_.size(), 0);
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t word = words_[wi];
        while (word) {
            const int b = std::countr_zero(word);
            word &= word - 1;
            const std::size_t shift_bits = static_cast<std::size_t>(b);
            // r ^= o << (wi*64 + shift_bits)
            for (std::size_t wj = 0; wj < o.words_.size(); ++wj) {
                const std::uint64_t low = o.words_[wj] << shift_bits;
                r.words_[wi + wj] ^= low;
                if (shift_bits)
                    r.words_[wi + wj + 1] ^= o.words_[wj] >> (64 - shift_bits);
            }
        }
    }
    r.trim();
    return r;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Gf2Poly::divmod: division by zero");
    Gf2Poly q, r = *this;
    const int dd = d.degree();
    int rd = r.degree();
    while (rd >= dd) {
        const unsigned shift = static_cast<unsigned>(rd - dd);
        q.set_coeff(shift, true);
        // r ^= d << shift
        Gf2Poly shifted;
        shifted.words_.resize(d.words_.size() + shift / 64 + 1, 0);
        const std::size_t word_off = shift / 64;
        const std::size_t bit_off = shift % 64;
        for (std::size_t i = 0; i < d.words_.size(); ++i) {
            shifted.words_[i + word_off] ^= d.words_[i] << bit_off;
            if (bit_off) shifted.words_[i + word_off + 1] ^= d.words_[i] >> (64 - bit_off);
        }
        shifted.trim();
        r = r + shifted;
        rd = r.degree();
    }
    return {q, r};
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    auto sup = support();
    for (auto it = sup.rbegin(); it != sup.rend(); ++it) {
        if (!s.empty()) s += " + ";
        if (*it == 0)
            s += "1";
        else if (*it == 1)
            s += "x";
        else
            s += "x^" + std::to_string(*it);
    }
    return s;
}

}  // namespace beclab
