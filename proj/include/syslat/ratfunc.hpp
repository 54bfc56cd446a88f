#pragma once

// Elements of Q(t), stored canonically as content * num / den where num and
// den are coprime primitive integer polynomials with positive leading
// coefficients. Equal fractions therefore have identical representations.

#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "syslat/polynomial.hpp"

namespace syslat {

class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long c) : content_(c) { // NOLINT(google-explicit-constructor)
        if (c != 0) num_ = ZPoly(1);
    }
    RatFunc(const BigRational& c) : content_(c) { // NOLINT(google-explicit-constructor)
        if (sgn(c) != 0) num_ = ZPoly(1);
    }
    RatFunc(const ZPoly& p) { // NOLINT(google-explicit-constructor)
        set(BigRational(1), p, ZPoly(1));
    }
    RatFunc(const ZPoly& num, const ZPoly& den) { set(BigRational(1), num, den); }

    static RatFunc t() { return RatFunc(ZPoly::t()); }

    const BigRational& content() const noexcept { return content_; }
    const ZPoly& num() const noexcept { return num_; }
    const ZPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return sgn(content_) == 0; }
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    /// Numerator as an integer polynomial, when this is a polynomial with
    /// integer coefficients.
    std::optional<ZPoly> as_integer_polynomial() const {
        if (!is_polynomial()) return std::nullopt;
        if (content_.get_den() != 1) return std::nullopt;
        return content_.get_num() * num_;
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.content_ = -r.content_;
        return r;
    }

    friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
        if (x.is_zero() || y.is_zero()) return {};
        RatFunc r;
        r.content_ = x.content_ * y.content_;
        if (x.is_constant() && y.is_constant()) {
            r.num_ = ZPoly(1);
            return r;
        }
        if (x.den_.is_one() && y.den_.is_one()) {
            r.num_ = x.num_ * y.num_;
            return r;
        }
        const ZPoly g1 = primitive_gcd(x.num_, y.den_);
        const ZPoly g2 = primitive_gcd(y.num_, x.den_);
        r.num_ = divexact(x.num_, g1) * divexact(y.num_, g2);
        r.den_ = divexact(x.den_, g2) * divexact(y.den_, g1);
        return r;
    }

    friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        const BigInt& q1 = x.content_.get_den();
        const BigInt& q2 = y.content_.get_den();
        BigInt l;
        mpz_lcm(l.get_mpz_t(), q1.get_mpz_t(), q2.get_mpz_t());
        const BigInt m1 = x.content_.get_num() * (l / q1);
        const BigInt m2 = y.content_.get_num() * (l / q2);
        if (x.den_ == y.den_) {
            ZPoly n = m1 * x.num_ + m2 * y.num_;
            return from_parts(make_rational(BigInt(1), l), n, x.den_);
        }
        const ZPoly g = primitive_gcd(x.den_, y.den_);
        const ZPoly a = divexact(x.den_, g);
        const ZPoly b = divexact(y.den_, g);
        ZPoly n = m1 * (x.num_ * b) + m2 * (y.num_ * a);
        // Only g can share a factor with the new numerator.
        RatFunc r = from_parts(make_rational(BigInt(1), l), n, g);
        if (r.is_zero()) return r;
        r.den_ = r.den_ * a * b;
        return r;
    }
    friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

    RatFunc inverse() const {
        if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of the zero rational function");
        RatFunc r;
        r.content_ = 1 / content_;
        r.num_ = den_;
        r.den_ = num_;
        return r;
    }
    friend RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inverse(); }

    RatFunc& operator+=(const RatFunc& y) { return *this = *this + y; }
    RatFunc& operator-=(const RatFunc& y) { return *this = *this - y; }
    RatFunc& operator*=(const RatFunc& y) { return *this = *this * y; }

    friend bool operator==(const RatFunc& x, const RatFunc& y) {
        return x.content_ == y.content_ && x.num_ == y.num_ && x.den_ == y.den_;
    }

    /// Value at t = t0; throws PoleAtSpecialization if the denominator vanishes.
    BigRational eval(const BigRational& t0) const {
        if (is_zero()) return 0;
        const BigRational d = den_.eval(t0);
        if (sgn(d) == 0) fail(ErrorCode::PoleAtSpecialization, "denominator " + to_string(den_) + " vanishes");
        return content_ * num_.eval(t0) / d;
    }

    /// r(k*t).
    RatFunc rescale(const BigInt& k) const {
        if (is_zero()) return {};
        RatFunc r;
        r.set(content_, num_.rescale(k), den_.rescale(k));
        return r;
    }

    std::size_t complexity() const {
        std::size_t c = syslat::complexity(content_);
        for (const auto& v : num_.coeffs()) c += syslat::complexity(v);
        for (const auto& v : den_.coeffs()) c += syslat::complexity(v);
        return c;
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) {
        if (r.is_zero()) return os << "0";
        const bool unit_num = r.num_.is_one();
        if (r.content_ != 1 || unit_num) {
            if (r.content_ == -1 && !unit_num) {
                os << "-";
            } else {
                os << r.content_;
                if (!unit_num) os << "*";
            }
        }
        if (!unit_num) os << "(" << r.num_ << ")";
        if (!r.den_.is_one()) os << "/(" << r.den_ << ")";
        return os;
    }

private:
    static RatFunc from_parts(const BigRational& c, const ZPoly& num, const ZPoly& den) {
        RatFunc r;
        r.set(c, num, den);
        return r;
    }

    void set(BigRational c, const ZPoly& num, const ZPoly& den) {
        if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
        if (num.is_zero() || sgn(c) == 0) {
            content_ = 0;
            num_ = ZPoly();
            den_ = ZPoly(1);
            return;
        }
        BigInt cn = num.content();
        if (sgn(num.lc()) < 0) cn = -cn;
        BigInt cd = den.content();
        if (sgn(den.lc()) < 0) cd = -cd;
        ZPoly n = num.divexact(cn);
        ZPoly d = den.divexact(cd);
        c *= BigRational(cn) / BigRational(cd);
        c.canonicalize();
        if (d.degree() > 0) {
            const ZPoly g = primitive_gcd(n, d);
            if (!g.is_one()) {
                n = divexact(n, g);
                d = divexact(d, g);
            }
        }
        content_ = std::move(c);
        num_ = std::move(n);
        den_ = std::move(d);
    }

    BigRational content_{0};
    ZPoly num_{};
    ZPoly den_{1};
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline std::size_t complexity(const RatFunc& x) { return x.complexity(); }
inline std::string to_string(const RatFunc& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

/// Square root in Q(t) with positive leading coefficient, if one exists.
inline std::optional<RatFunc> ratfunc_sqrt(const RatFunc& q) {
    if (q.is_zero()) return RatFunc();
    auto c = is_rational_square(q.content());
    if (!c) return std::nullopt;
    auto n = poly_sqrt(q.num());
    if (!n) return std::nullopt;
    auto d = poly_sqrt(q.den());
    if (!d) return std::nullopt;
    return RatFunc(*c) * RatFunc(*n, *d);
}

} // namespace syslat
