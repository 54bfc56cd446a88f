#pragma once

// Dense univariate polynomials with integer coefficients, in the variable t.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "syslat/rational.hpp"

namespace syslat {

class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long c) { // NOLINT(google-explicit-constructor)
        if (c != 0) coeffs_.emplace_back(c);
    }
    explicit ZPoly(BigInt c) {
        if (sgn(c) != 0) coeffs_.push_back(std::move(c));
    }
    /// Coefficients from the constant term upwards.
    explicit ZPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static ZPoly t() { return ZPoly(std::vector<BigInt>{0, 1}); }
    static ZPoly monomial(const BigInt& c, std::size_t deg) {
        std::vector<BigInt> v(deg + 1, BigInt(0));
        v[deg] = c;
        return ZPoly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const BigInt& lc() const { return coeffs_.back(); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    ZPoly operator-() const {
        ZPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend ZPoly operator+(const ZPoly& x, const ZPoly& y) {
        std::vector<BigInt> r(std::max(x.coeffs_.size(), y.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) r[i] += x.coeffs_[i];
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) r[i] += y.coeffs_[i];
        return ZPoly(std::move(r));
    }
    friend ZPoly operator-(const ZPoly& x, const ZPoly& y) { return x + (-y); }
    friend ZPoly operator*(const ZPoly& x, const ZPoly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<BigInt> r(x.coeffs_.size() + y.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (sgn(x.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                mpz_addmul(r[i + j].get_mpz_t(), x.coeffs_[i].get_mpz_t(), y.coeffs_[j].get_mpz_t());
        }
        return ZPoly(std::move(r));
    }
    friend ZPoly operator*(const BigInt& c, const ZPoly& y) {
        if (sgn(c) == 0) return {};
        ZPoly r = y;
        for (auto& v : r.coeffs_) v *= c;
        return r;
    }
    ZPoly& operator+=(const ZPoly& y) { return *this = *this + y; }
    ZPoly& operator*=(const ZPoly& y) { return *this = *this * y; }

    friend bool operator==(const ZPoly&, const ZPoly&) = default;

    /// Divides every coefficient by c, which must divide them all.
    ZPoly divexact(const BigInt& c) const {
        ZPoly r = *this;
        for (auto& v : r.coeffs_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        return r;
    }

    BigRational eval(const BigRational& x) const {
        BigRational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
        return acc;
    }

    /// p(k*t).
    ZPoly rescale(const BigInt& k) const {
        ZPoly r = *this;
        BigInt pw = 1;
        for (auto& v : r.coeffs_) {
            v *= pw;
            pw *= k;
        }
        r.trim();
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const ZPoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (long i = p.degree(); i >= 0; --i) {
            const BigInt& c = p.coeffs_[static_cast<std::size_t>(i)];
            if (sgn(c) == 0) continue;
            BigInt mag = abs(c);
            if (first) {
                if (sgn(c) < 0) os << "-";
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0 || mag != 1) os << mag;
            if (i > 0) os << (mag != 1 ? "*" : "") << "t";
            if (i > 1) os << "^" << i;
        }
        return os;
    }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// Primitive part with positive leading coefficient; zero stays zero.
inline ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return p;
    BigInt c = p.content();
    if (sgn(p.lc()) < 0) c = -c;
    return c == 1 ? p : p.divexact(c);
}

/// Pseudo-remainder of a by b in Z[t], up to a nonzero integer factor.
/// Only its associate class matters to the gcd.
inline ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "pseudo-remainder by zero polynomial");
    std::vector<BigInt> r = a.coeffs();
    const long db = b.degree();
    const BigInt& lb = b.lc();
    long dr = static_cast<long>(r.size()) - 1;
    while (dr >= db && dr >= 0) {
        const BigInt lr = r[static_cast<std::size_t>(dr)];
        if (sgn(lr) != 0) {
            for (auto& v : r) v *= lb;
            for (long j = 0; j <= db; ++j)
                r[static_cast<std::size_t>(dr - db + j)] -= lr * b.coeffs()[static_cast<std::size_t>(j)];
        }
        r.pop_back();
        --dr;
        while (!r.empty() && sgn(r.back()) == 0) {
            r.pop_back();
            --dr;
        }
        // keep coefficients small along the way
        if (!r.empty()) {
            ZPoly tmp(r);
            r = primitive_part(tmp).coeffs();
            dr = static_cast<long>(r.size()) - 1;
        }
    }
    return ZPoly(std::move(r));
}

/// Exact quotient of a by b in Z[t]; b must divide a.
inline ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (b.is_one()) return a;
    if (a.is_zero()) return a;
    if (b.degree() == 0) return a.divexact(b.lc());
    std::vector<BigInt> r = a.coeffs();
    const long db = b.degree();
    long dr = a.degree();
    if (dr < db) fail(ErrorCode::InvalidArgument, "inexact polynomial division");
    std::vector<BigInt> q(static_cast<std::size_t>(dr - db + 1), BigInt(0));
    for (long k = dr - db; k >= 0; --k) {
        BigInt& top = r[static_cast<std::size_t>(k + db)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t()))
            fail(ErrorCode::InvalidArgument, "inexact polynomial division");
        BigInt c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
        for (long j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
        q[static_cast<std::size_t>(k)] = std::move(c);
    }
    for (const auto& v : r)
        if (sgn(v) != 0) fail(ErrorCode::InvalidArgument, "inexact polynomial division");
    return ZPoly(std::move(q));
}

/// Primitive gcd (positive leading coefficient) via the primitive PRS.
inline ZPoly primitive_gcd(const ZPoly& x, const ZPoly& y) {
    if (x.is_zero()) return primitive_part(y);
    if (y.is_zero()) return primitive_part(x);
    if (x.degree() == 0 || y.degree() == 0) return ZPoly(1);
    ZPoly a = primitive_part(x);
    ZPoly b = primitive_part(y);
    if (a == b) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
        if (b.degree() == 0) return ZPoly(1);
    }
    return primitive_part(a);
}

/// Square root in Z[t] when p is the square of an integer polynomial with
/// positive leading coefficient.
inline std::optional<ZPoly> poly_sqrt(const ZPoly& p) {
    if (p.is_zero()) return ZPoly();
    if (p.degree() % 2 != 0) return std::nullopt;
    auto lead = exact_isqrt(p.lc());
    if (!lead) return std::nullopt;
    const std::size_t n = static_cast<std::size_t>(p.degree() / 2);
    // Determine root coefficients from the top down: p = r^2.
    std::vector<BigRational> r(n + 1, BigRational(0));
    r[n] = *lead;
    for (std::size_t k = 1; k <= n; ++k) {
        // coefficient of t^(2n-k) in r^2 is 2 r_n r_{n-k} + sum_{i=1}^{k-1} r_{n-i} r_{n-k+i}
        BigRational acc = BigRational(p.coeff(2 * n - k));
        for (std::size_t i = 1; i < k; ++i) acc -= r[n - i] * r[n - k + i];
        r[n - k] = acc / (2 * r[n]);
    }
    std::vector<BigInt> zc;
    zc.reserve(n + 1);
    for (const auto& c : r) {
        if (c.get_den() != 1) return std::nullopt;
        zc.push_back(c.get_num());
    }
    ZPoly root(std::move(zc));
    if (root * root != p) return std::nullopt;
    return root;
}

inline std::string to_string(const ZPoly& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

} // namespace syslat
