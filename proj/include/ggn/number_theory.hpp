#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace ggn {

/// Deterministic trial division against a small-prime table; exact for all
/// 64-bit inputs, fast below about 10^12.
bool is_prime(std::uint64_t n);

/// (p, k) with n = p^k, p prime, k >= 1; nullopt if n is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Least generator of the multiplicative group mod the prime p.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace ggn
