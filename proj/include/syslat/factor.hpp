#pragma once

// Integer factorization: trial division by the primes below 10^6, then
// Miller-Rabin and Pollard-Brent on what remains.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "syslat/rational.hpp"

namespace syslat {

inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1000000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

/// Miller-Rabin with the first 24 primes as witnesses. This is a proof
/// below 3.3 * 10^24 and a strong test above it.
inline bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    static constexpr unsigned witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                             41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
    for (unsigned p : witnesses) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
    }
    const BigInt nm1 = n - 1;
    BigInt d = nm1;
    unsigned r = 0;
    while (mpz_even_p(d.get_mpz_t()) != 0) {
        d /= 2;
        ++r;
    }
    for (unsigned a : witnesses) {
        BigInt x;
        const BigInt base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r && witness; ++i) {
            x = x * x % n;
            if (x == nm1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

/// A nontrivial factor of the odd composite n (Brent's cycle variant).
inline BigInt pollard_brent(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        auto f = [&](const BigInt& x) { return BigInt((x * x + c) % n); };
        BigInt y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(BigInt(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                mpz_gcd(g.get_mpz_t(), BigInt(abs(BigInt(x - ys))).get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

using Factorization = std::vector<std::pair<BigInt, unsigned>>;

namespace detail {
inline void split_large(const BigInt& n, std::vector<BigInt>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    const BigInt g = pollard_brent(n);
    split_large(g, out);
    split_large(n / g, out);
}
} // namespace detail

/// Prime factorization of n >= 1, primes ascending.
inline Factorization factorize(const BigInt& n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "factorize needs n >= 1");
    Factorization out;
    BigInt rest = n;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        out.emplace_back(BigInt(p), e);
    }
    std::vector<BigInt> large;
    detail::split_large(rest, large);
    std::sort(large.begin(), large.end());
    for (const auto& p : large) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline BigInt expand(const Factorization& f) {
    BigInt r = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
}

} // namespace syslat
