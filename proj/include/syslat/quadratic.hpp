#pragma once

// Real quadratic fields Q(sqrt d), their rings of integers O_d and the
// Gaussian integers Z[i].

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include "syslat/rational.hpp"

namespace syslat {

/// a + b*sqrt(d). A purely rational element may carry d == 0, meaning "any
/// field"; it adopts the radicand of whatever it is combined with.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(long v) : a_(v) {} // NOLINT(google-explicit-constructor)
    QuadElem(const BigRational& a) : a_(a) {} // NOLINT(google-explicit-constructor)
    QuadElem(BigRational a, BigRational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d_ == 0) {
            if (sgn(b_) != 0) fail(ErrorCode::InvalidD, "irrational part without a radicand");
        } else if (d_ < 2 || !is_squarefree(d_)) {
            fail(ErrorCode::InvalidD, "radicand must be square-free and >= 2, got " + std::to_string(d_));
        }
    }

    static QuadElem sqrt_d(std::int64_t d) { return QuadElem(0, 1, d); }

    const BigRational& a() const noexcept { return a_; }
    const BigRational& b() const noexcept { return b_; }
    std::int64_t d() const noexcept { return d_; }
    bool is_rational() const noexcept { return sgn(b_) == 0; }

    /// x * tau(x), always rational.
    BigRational norm() const {
        BigRational n = a_ * a_ - BigRational(d_) * b_ * b_;
        return n;
    }

    QuadElem operator-() const { return QuadElem(-a_, -b_, d_); }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        return QuadElem(x.a_ + y.a_, x.b_ + y.b_, common_d(x, y));
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        return QuadElem(x.a_ - y.a_, x.b_ - y.b_, common_d(x, y));
    }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        const std::int64_t d = common_d(x, y);
        BigRational a = x.a_ * y.a_ + BigRational(d) * x.b_ * y.b_;
        BigRational b = x.a_ * y.b_ + x.b_ * y.a_;
        return QuadElem(std::move(a), std::move(b), d);
    }
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) {
        const BigRational n = y.norm();
        if (sgn(n) == 0) fail(ErrorCode::DivisionByZero, "division by zero in Q(sqrt d)");
        const QuadElem num = x * y.conjugate();
        return QuadElem(num.a_ / n, num.b_ / n, num.d_);
    }
    QuadElem& operator+=(const QuadElem& y) { return *this = *this + y; }
    QuadElem& operator-=(const QuadElem& y) { return *this = *this - y; }
    QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return sgn(x.b_) == 0 || x.d_ == y.d_;
    }

    QuadElem conjugate() const { return QuadElem(a_, -b_, d_); }

    friend std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
        os << x.a_;
        if (sgn(x.b_) != 0) os << (sgn(x.b_) > 0 ? " + " : " - ") << abs(x.b_) << "*sqrt(" << x.d_ << ")";
        return os;
    }

private:
    static std::int64_t common_d(const QuadElem& x, const QuadElem& y) {
        if (x.d_ == y.d_ || y.d_ == 0) return x.d_;
        if (x.d_ == 0) return y.d_;
        fail(ErrorCode::DomainMismatch,
             "mixing Q(sqrt " + std::to_string(x.d_) + ") and Q(sqrt " + std::to_string(y.d_) + ")");
    }

    BigRational a_{0};
    BigRational b_{0};
    std::int64_t d_ = 0;
};

/// The non-trivial Galois involution sqrt(d) -> -sqrt(d).
inline QuadElem tau(const QuadElem& x) { return x.conjugate(); }

inline QuadElem zero_like(const QuadElem& x) { return QuadElem(0, 0, x.d()); }
inline QuadElem one_like(const QuadElem& x) { return QuadElem(1, 0, x.d()); }
inline bool is_zero(const QuadElem& x) { return sgn(x.a()) == 0 && sgn(x.b()) == 0; }
inline std::size_t complexity(const QuadElem& x) { return complexity(x.a()) + complexity(x.b()); }
inline std::string to_string(const QuadElem& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// Membership in O_d: Z[sqrt d] for d = 2,3 mod 4, Z[(1+sqrt d)/2] for
/// d = 1 mod 4.
inline bool is_integral(const QuadElem& x) {
    if (x.d() == 0 || x.d() % 4 != 1) return is_integer(x.a()) && is_integer(x.b());
    const BigRational two_a = 2 * x.a();
    const BigRational two_b = 2 * x.b();
    if (!is_integer(two_a) || !is_integer(two_b)) return false;
    return mpz_even_p(BigInt(two_a.get_num() - two_b.get_num()).get_mpz_t()) != 0;
}

/// (p + q*sqrt(d)) / 2 with the parity invariant of O_d.
class OdElem {
public:
    OdElem(BigInt p, BigInt q, std::int64_t d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
        if (d_ < 2 || !is_squarefree(d_)) fail(ErrorCode::InvalidD, "O_d needs square-free d >= 2");
        const bool p_even = mpz_even_p(p_.get_mpz_t()) != 0;
        const bool q_even = mpz_even_p(q_.get_mpz_t()) != 0;
        if (d_ % 4 == 1 ? p_even != q_even : !(p_even && q_even))
            fail(ErrorCode::NonIntegralEntry, "parity invariant of O_d violated");
    }

    static OdElem from_quad(const QuadElem& x, std::int64_t d) {
        if (!is_integral(x)) fail(ErrorCode::NonIntegralEntry, "element " + to_string(x) + " is not in O_d");
        if (x.d() != 0 && x.d() != d) fail(ErrorCode::DomainMismatch, "radicand mismatch");
        const BigRational p = 2 * x.a();
        const BigRational q = 2 * x.b();
        return OdElem(p.get_num(), q.get_num(), d);
    }

    QuadElem to_quad() const { return QuadElem(make_rational(p_, 2), make_rational(q_, 2), d_); }

    const BigInt& p() const noexcept { return p_; }
    const BigInt& q() const noexcept { return q_; }
    std::int64_t d() const noexcept { return d_; }

    friend OdElem operator+(const OdElem& x, const OdElem& y) { return OdElem(x.p_ + y.p_, x.q_ + y.q_, x.d_); }
    friend OdElem operator-(const OdElem& x, const OdElem& y) { return OdElem(x.p_ - y.p_, x.q_ - y.q_, x.d_); }
    friend OdElem operator*(const OdElem& x, const OdElem& y) {
        BigInt p = x.p_ * y.p_ + x.d_ * x.q_ * y.q_;
        BigInt q = x.p_ * y.q_ + x.q_ * y.p_;
        mpz_divexact_ui(p.get_mpz_t(), p.get_mpz_t(), 2);
        mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), 2);
        return OdElem(std::move(p), std::move(q), x.d_);
    }
    friend bool operator==(const OdElem& x, const OdElem& y) = default;

private:
    BigInt p_;
    BigInt q_;
    std::int64_t d_;
};

class GaussianInt {
public:
    GaussianInt() = default;
    GaussianInt(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
    GaussianInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}

    const BigInt& re() const noexcept { return re_; }
    const BigInt& im() const noexcept { return im_; }

    GaussianInt operator-() const { return {-re_, -im_}; }
    friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
    friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
    friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
    }
    GaussianInt& operator+=(const GaussianInt& y) { return *this = *this + y; }
    friend bool operator==(const GaussianInt& x, const GaussianInt& y) = default;

    GaussianInt conj() const { return {re_, -im_}; }
    BigInt norm() const { return re_ * re_ + im_ * im_; }

    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
        if (sgn(z.im_) == 0) return os << z.re_;
        if (sgn(z.re_) == 0) return os << z.im_ << "*i";
        return os << z.re_ << (sgn(z.im_) > 0 ? " + " : " - ") << abs(z.im_) << "*i";
    }

private:
    BigInt re_{0};
    BigInt im_{0};
};

inline bool is_zero(const GaussianInt& z) { return sgn(z.re()) == 0 && sgn(z.im()) == 0; }

/// Exact quotient in Z[i]; throws if y does not divide x.
inline GaussianInt exact_div(const GaussianInt& x, const GaussianInt& y) {
    const BigInt n = y.norm();
    if (sgn(n) == 0) fail(ErrorCode::DivisionByZero, "division by zero in Z[i]");
    GaussianInt num = x * y.conj();
    if (!mpz_divisible_p(num.re().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.im().get_mpz_t(), n.get_mpz_t()))
        fail(ErrorCode::InvalidArgument, "inexact division in Z[i]");
    return {num.re() / n, num.im() / n};
}

/// Canonical byte string used for exact hashing of matrix entries.
inline void serialize(const GaussianInt& z, std::string& out) {
    out += z.re().get_str(16);
    out += ',';
    out += z.im().get_str(16);
    out += ';';
}

} // namespace syslat
