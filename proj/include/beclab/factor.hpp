#pragma once

#include <cstdint>
#include <vector>

namespace beclab {

bool is_prime_u64(std::uint64_t n);

// Distinct prime factors, ascending.  Deterministic (Miller-Rabin with the
// known 64-bit witness set plus Pollard rho with fixed polynomial offsets).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

}  // namespace beclab
