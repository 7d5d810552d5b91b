#pragma once

#include <cstdint>
#include <vector>

#include "beclab/gf2poly.hpp"

namespace beclab {

// GF(2^m) in polynomial basis modulo a primitive polynomial, elements packed
// into uint64 (2 <= m <= 63).  The modulus comes from
// smallest_primitive_polynomial, and the constructor verifies that x
// generates the full multiplicative group.
class Gf2m {
public:
    explicit Gf2m(unsigned m);
    Gf2m(unsigned m, const Gf2Poly& modulus);  // modulus must be primitive

    unsigned m() const { return m_; }
    std::uint64_t group_order() const { return order_; }  // 2^m - 1
    const Gf2Poly& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t alpha() const { return 2; }  // the class of x; a generator
    // alpha^e, e taken mod group order.
    std::uint64_t alpha_pow(std::uint64_t e) const;

    // Element of multiplicative order exactly n; requires n | 2^m - 1.
    std::uint64_t element_of_order(std::uint64_t n) const;
    std::uint64_t element_order(std::uint64_t a) const;

    // Minimal polynomial of beta over GF(2): product of (x - beta^(2^i))
    // over the distinct conjugates.  Coefficients land in GF(2).
    Gf2Poly minimal_polynomial(std::uint64_t beta) const;

private:
    void verify_primitive() const;
    unsigned m_;
    std::uint64_t order_;
    Gf2Poly modulus_;
    std::uint64_t modulus_low_;  // modulus minus the x^m term
};

// Smallest primitive polynomial of degree m in lexicographic (integer) order,
// found by deterministic search and certified via the factored group order.
Gf2Poly smallest_primitive_polynomial(unsigned m);

// Cyclotomic coset of j mod n under doubling, sorted, smallest first.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t j, std::uint64_t n);
// Sorted list of the smallest representatives of all nonzero cosets mod n.
std::vector<std::uint64_t> coset_representatives(std::uint64_t n);

}  // namespace beclab
