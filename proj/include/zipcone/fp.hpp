#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zipcone {

// Arithmetic in the prime field F_p, p a machine-word prime (p < 2^31).
// All residues are kept reduced in [0, p).
namespace fp {

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

// Inverse via Fermat; requires a != 0 mod p.
inline uint32_t inv(uint32_t a, uint32_t p) {
    if (a % p == 0) throw std::domain_error("fp::inv: zero has no inverse");
    return pow(a % p, p - 2, p);
}

// Reduce a signed integer into [0, p).
inline uint32_t reduce(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

// a^e for signed exponents (a != 0 when e < 0).
inline uint32_t pow_signed(uint32_t a, long long e, uint32_t p) {
    if (e >= 0) return pow(a, static_cast<uint64_t>(e), p);
    return pow(inv(a, p), static_cast<uint64_t>(-e), p);
}

inline bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Smallest generator of F_p^x; returns 1 for p = 2.
inline uint32_t primitive_root(uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("fp::primitive_root: p not prime");
    if (p == 2) return 1;
    uint32_t factors[32];
    int nf = 0;
    uint32_t m = p - 1;
    for (uint32_t q = 2; static_cast<uint64_t>(q) * q <= m; ++q)
        if (m % q == 0) {
            factors[nf++] = q;
            while (m % q == 0) m /= q;
        }
    if (m > 1) factors[nf++] = m;
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (int i = 0; i < nf; ++i)
            if (pow(g, (p - 1) / factors[i], p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("fp::primitive_root: none found");
}

}  // namespace fp

// Thrown when a computation would exceed a configured resource budget.
class budget_error : public std::runtime_error {
  public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zipcone
