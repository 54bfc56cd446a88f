#pragma once

// Arbitrary-precision integers and rationals (GMP) plus the small set of
// customization points the generic matrix code dispatches on.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "syslat/error.hpp"

namespace syslat {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Customization points. Element types with runtime parameters (a radicand,
// a modulus) provide non-template overloads found by ADL.
template <class T>
T zero_like(const T&) {
    return T(0);
}
template <class T>
T one_like(const T&) {
    return T(1);
}
template <class T>
bool is_zero(const T& x) {
    return x == zero_like(x);
}
/// Rough size measure used to pick cheap pivots; never affects results.
template <class T>
std::size_t complexity(const T&) {
    return 0;
}

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }
inline std::size_t complexity(const BigInt& x) { return mpz_sizeinbase(x.get_mpz_t(), 2); }
inline std::size_t complexity(const BigRational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

inline BigRational make_rational(const BigInt& num, const BigInt& den = 1) {
    if (sgn(den) == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

/// Non-negative residue of x modulo m (m > 0).
inline BigInt mod_floor(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (sgn(n) < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Returns the non-negative r with r*r == q when q is the square of a
/// rational number.
inline std::optional<BigRational> is_rational_square(const BigRational& q) {
    if (sgn(q) < 0) return std::nullopt;
    auto num = exact_isqrt(q.get_num());
    if (!num) return std::nullopt;
    auto den = exact_isqrt(q.get_den());
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

inline bool is_squarefree(std::int64_t d) {
    if (d == 0) return false;
    std::uint64_t n = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRational& x) { return x.get_str(); }

} // namespace syslat
