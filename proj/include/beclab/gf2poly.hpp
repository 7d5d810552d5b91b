#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace beclab {

// Polynomial over GF(2), bit-packed (bit i = coefficient of x^i).
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return Gf2Poly(); }
    static Gf2Poly one() { return from_support({0}); }
    static Gf2Poly x() { return from_support({1}); }
    static Gf2Poly from_support(const std::vector<unsigned>& exponents);
    static Gf2Poly from_support(std::initializer_list<unsigned> exponents);
    // x^n + 1
    static Gf2Poly xn_plus_1(unsigned n);

    bool is_zero() const { return words_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool coeff(unsigned i) const;
    void set_coeff(unsigned i, bool v);
    std::size_t weight() const;
    std::vector<unsigned> support() const;

    Gf2Poly operator+(const Gf2Poly& o) const;  // == subtraction over GF(2)
    Gf2Poly operator*(const Gf2Poly& o) const;
    // Quotient and remainder of *this / d.  d must be nonzero.
    std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& d) const;
    Gf2Poly mod(const Gf2Poly& d) const { return divmod(d).second; }

    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

    std::string to_string() const;  // "x^3 + x + 1"

    bool operator==(const Gf2Poly&) const = default;

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

}  // namespace beclab
