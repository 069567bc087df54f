#ifndef SIA_PRIMALITY_HPP
#define SIA_PRIMALITY_HPP

#include "sia/bigint.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sia {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);

// deterministic Miller-Rabin for the full 64-bit range
bool is_prime_u64(uint64_t n);

// Miller-Rabin: deterministic fixed witness set below 3.317e24, 64
// pseudo-random witnesses (seeded from n, reproducible) above. n >= 0.
bool is_probable_prime(const BigInt& n);

// the first n primes
std::vector<uint64_t> first_primes(size_t n);

// full factorization (trial division + Pollard-Brent rho)
std::map<uint64_t, int> factor_u64(uint64_t n);

// all positive divisors, sorted
std::vector<uint64_t> divisors_u64(uint64_t n);

// q = p^a with p prime, a >= 1; returns {p, a} or throws
std::pair<uint64_t, unsigned> prime_power_split(const BigInt& q);

}  // namespace sia

#endif
