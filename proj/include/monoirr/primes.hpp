#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace monoirr {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// ascending order. Throws UnsupportedSize above `max_n`.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n,
                                                          std::uint64_t max_n = 0x7fffffffULL);

/// All primes p with lo <= p <= hi, by sieve of Eratosthenes.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Sieve flags: result[i] is true iff i is prime, for 0 <= i <= limit.
std::vector<bool> prime_sieve(std::uint64_t limit);

}  // namespace monoirr
