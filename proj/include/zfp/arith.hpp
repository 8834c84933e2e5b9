#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zfp {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// p when n = p^k for a prime p and k >= 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

// gcd of the absolute values; 0 for an all-zero vector.
std::int64_t gcd_of(std::span<const std::int64_t> v);

// Primes p <= limit in increasing order.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

}  // namespace zfp
