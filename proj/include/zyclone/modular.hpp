#pragma once

#include <cstdint>

#include "errors.hpp"

namespace zyclone {

// Deterministic trial division; every prime used here is far below 10^6.
inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline long long mod(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

/// Least r >= 1 with a^r = 1 (mod p); divides p-1.
inline int multiplicative_order(long long a, long long p) {
    if (!is_prime(p)) throw NotPrime("multiplicative_order: p must be prime");
    long long x = mod(a, p);
    if (x == 0) throw ZeroResidue("multiplicative_order: residue 0 mod p");
    long long cur = x;
    int r = 1;
    while (cur != 1) {
        cur = cur * x % p;
        ++r;
    }
    return r;
}

/// The prime driving the algebraic construction for given (k, ell):
/// smallest p with p > (k-1)^ell + 1 and p > k. Bertrand-Chebyshev
/// guarantees p <= 2(k-1)^ell, which is checked and recorded.
struct PrimeChoice {
    int k = 0;
    int ell = 0;
    long long p = 0;
    long long lower = 0;  // (k-1)^ell + 1 < p
    long long upper = 0;  // p <= 2(k-1)^ell
};

inline PrimeChoice smallest_admissible_prime(int k, int ell) {
    if (k < 3) throw UniformityTooSmall("smallest_admissible_prime: k >= 3");
    if (ell < 2) throw LengthTooSmall("smallest_admissible_prime: ell >= 2");
    long long power = 1;
    for (int i = 0; i < ell; ++i) {
        power *= k - 1;
        if (power > (1ll << 40))
            throw InstanceTooLarge("smallest_admissible_prime: (k-1)^ell too large");
    }
    long long p = power + 2;
    if (p <= k) p = k + 1;
    while (!is_prime(p)) ++p;
    PrimeChoice out{k, ell, p, power + 1, 2 * power};
    if (p > out.upper)
        throw InstanceTooLarge("smallest_admissible_prime: Bertrand bound violated");
    return out;
}

}  // namespace zyclone
