#pragma once

#include <cstdint>
#include <vector>

#include "cnum/errors.hpp"

namespace cnum {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Factorization and residue bookkeeping of a square-free n.
// primes is strictly increasing; k counts odd primes; a = 1 iff n is odd.
struct PrimeProfile {
    u64 n = 1;
    std::vector<u64> primes;
    int k = 0;
    int a = 1;
    int residue8 = 1;

    bool is_even() const { return a == 0; }
};

// Exact factorization of a square-free n >= 1.
// Throws InvalidInput for n = 0, NotSquarefree if p^2 | n.
PrimeProfile factor_squarefree(u64 n);

// Jacobi symbol (a/m) for odd m >= 1. Throws InvalidInput for even or zero m.
int jacobi(i64 a, u64 m);

// Kronecker symbol (a/n), n any nonzero integer. Extends jacobi to even n.
int kronecker(i64 a, i64 n);

// Root number of E_n : ny^2 = x^3 - x for square-free n:
// +1 for n = 1,2,3 (mod 8), -1 for n = 5,6,7 (mod 8).
int root_number(u64 n);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(u64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

// Largest r with r^2 <= x.
u64 isqrt(u64 x);
i64 isqrt128(i128 x);
bool is_perfect_square(u64 x, u64* root = nullptr);

} // namespace cnum
