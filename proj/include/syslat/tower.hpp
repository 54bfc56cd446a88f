#pragma once

// K[s, w] / (s^2 - S, w^2 - W) for a field K and radicands S, W in K.
//
// The symbolic tower Q(t)(sqrt(t^2-1), sqrt(t^2+2)) is Biquadratic<RatFunc,
// TowerRadicands>; its value at a rational point t0 is a
// Biquadratic<BigRational, RationalRadicands> with S = t0^2-1, W = t0^2+2.

#include <array>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "syslat/quadratic.hpp"
#include "syslat/ratfunc.hpp"

namespace syslat {

/// s^2 = t^2 - 1, w^2 = t^2 + 2.
struct TowerRadicands {
    static const RatFunc& s_square() {
        static const RatFunc v(ZPoly(std::vector<BigInt>{-1, 0, 1}));
        return v;
    }
    static const RatFunc& w_square() {
        static const RatFunc v(ZPoly(std::vector<BigInt>{2, 0, 1}));
        return v;
    }
    static TowerRadicands merge(const TowerRadicands&, const TowerRadicands&) { return {}; }
    friend bool operator==(const TowerRadicands&, const TowerRadicands&) { return true; }
};

struct RationalRadicands {
    std::shared_ptr<const std::pair<BigRational, BigRational>> values;

    RationalRadicands() = default;
    RationalRadicands(BigRational s_sq, BigRational w_sq)
        : values(std::make_shared<const std::pair<BigRational, BigRational>>(std::move(s_sq), std::move(w_sq))) {}

    const BigRational& s_square() const { return values->first; }
    const BigRational& w_square() const { return values->second; }

    /// An unset radicand pair belongs to a bare constant and adopts the other.
    static RationalRadicands merge(const RationalRadicands& x, const RationalRadicands& y) {
        if (!x.values) return y;
        if (!y.values || x.values == y.values || *x.values == *y.values) return x;
        fail(ErrorCode::DomainMismatch, "biquadratic elements over different radicands");
    }
    friend bool operator==(const RationalRadicands& x, const RationalRadicands& y) {
        if (x.values == y.values) return true;
        if (!x.values || !y.values) return false;
        return *x.values == *y.values;
    }
};

template <class K, class Radicands>
class Biquadratic {
public:
    Biquadratic() = default;
    Biquadratic(long c) : c_{K(c), K(0), K(0), K(0)} {} // NOLINT(google-explicit-constructor)
    Biquadratic(const K& c00) : c_{c00, K(0), K(0), K(0)} {} // NOLINT(google-explicit-constructor)
    Biquadratic(K c00, K c10, K c01, K c11, Radicands rad = {})
        : c_{std::move(c00), std::move(c10), std::move(c01), std::move(c11)}, rad_(std::move(rad)) {}

    /// Coefficients of 1, s, w and s*w.
    const K& c00() const noexcept { return c_[0]; }
    const K& c10() const noexcept { return c_[1]; }
    const K& c01() const noexcept { return c_[2]; }
    const K& c11() const noexcept { return c_[3]; }
    const Radicands& radicands() const noexcept { return rad_; }

    bool is_zero() const { return syslat::is_zero(c_[0]) && syslat::is_zero(c_[1]) && syslat::is_zero(c_[2]) && syslat::is_zero(c_[3]); }
    /// True when the element lies in K(s), the subring used by the 8-dimensional representation.
    bool free_of_w() const { return syslat::is_zero(c_[2]) && syslat::is_zero(c_[3]); }
    bool in_base() const { return free_of_w() && syslat::is_zero(c_[1]); }

    Biquadratic operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3], rad_}; }

    friend Biquadratic operator+(const Biquadratic& x, const Biquadratic& y) {
        return {x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3],
                Radicands::merge(x.rad_, y.rad_)};
    }
    friend Biquadratic operator-(const Biquadratic& x, const Biquadratic& y) {
        return {x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3],
                Radicands::merge(x.rad_, y.rad_)};
    }

    friend Biquadratic operator*(const Biquadratic& x, const Biquadratic& y) {
        Radicands rad = Radicands::merge(x.rad_, y.rad_);
        const auto& a = x.c_;
        const auto& b = y.c_;
        if (x.in_base()) return {a[0] * b[0], a[0] * b[1], a[0] * b[2], a[0] * b[3], rad};
        if (y.in_base()) return {a[0] * b[0], a[1] * b[0], a[2] * b[0], a[3] * b[0], rad};
        const K& S = rad.s_square();
        const K& W = rad.w_square();
        K r00 = a[0] * b[0] + S * (a[1] * b[1]);
        K r10 = a[0] * b[1] + a[1] * b[0];
        K r01 = a[0] * b[2] + a[2] * b[0];
        K r11 = a[0] * b[3] + a[3] * b[0];
        if (!x.free_of_w() || !y.free_of_w()) {
            r00 += W * (a[2] * b[2]) + S * W * (a[3] * b[3]);
            r10 += W * (a[2] * b[3] + a[3] * b[2]);
            r01 += S * (a[1] * b[3] + a[3] * b[1]);
            r11 += a[1] * b[2] + a[2] * b[1];
        }
        return {std::move(r00), std::move(r10), std::move(r01), std::move(r11), rad};
    }

    Biquadratic& operator+=(const Biquadratic& y) { return *this = *this + y; }
    Biquadratic& operator-=(const Biquadratic& y) { return *this = *this - y; }
    Biquadratic& operator*=(const Biquadratic& y) { return *this = *this * y; }

    /// s -> -s, fixing K and w.
    Biquadratic conj_s() const { return {c_[0], -c_[1], c_[2], -c_[3], rad_}; }
    /// w -> -w, fixing K and s.
    Biquadratic conj_w() const { return {c_[0], c_[1], -c_[2], -c_[3], rad_}; }

    /// Inverse by multiplying through the conjugates down the tower.
    Biquadratic inverse() const {
        if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in the radical tower");
        if (in_base()) {
            if (syslat::is_zero(c_[0])) fail(ErrorCode::DivisionByZero, "zero divisor");
            return Biquadratic(K(1) / c_[0], K(0), K(0), K(0), rad_);
        }
        const Biquadratic wbar = conj_w();
        const Biquadratic z = *this * wbar; // lies in K(s)
        const Biquadratic zbar = z.conj_s();
        const Biquadratic n = z * zbar; // lies in K
        if (syslat::is_zero(n.c_[0])) fail(ErrorCode::DivisionByZero, "zero divisor in the radical tower");
        const K ninv = K(1) / n.c_[0];
        const Biquadratic r = wbar * zbar;
        return {r.c_[0] * ninv, r.c_[1] * ninv, r.c_[2] * ninv, r.c_[3] * ninv, r.rad_};
    }
    friend Biquadratic operator/(const Biquadratic& x, const Biquadratic& y) { return x * y.inverse(); }

    friend bool operator==(const Biquadratic& x, const Biquadratic& y) {
        return x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] && x.c_[2] == y.c_[2] && x.c_[3] == y.c_[3];
    }

    std::size_t complexity() const {
        return syslat::complexity(c_[0]) + syslat::complexity(c_[1]) + syslat::complexity(c_[2]) +
               syslat::complexity(c_[3]);
    }

    friend std::ostream& operator<<(std::ostream& os, const Biquadratic& x) {
        static constexpr const char* names[] = {"", "s", "w", "s*w"};
        bool any = false;
        for (std::size_t i = 0; i < 4; ++i) {
            if (syslat::is_zero(x.c_[i])) continue;
            if (any) os << " + ";
            os << "(" << x.c_[i] << ")";
            if (i > 0) os << "*" << names[i];
            any = true;
        }
        if (!any) os << "0";
        return os;
    }

private:
    std::array<K, 4> c_{K(0), K(0), K(0), K(0)};
    Radicands rad_{};
};

template <class K, class R>
Biquadratic<K, R> zero_like(const Biquadratic<K, R>& x) {
    return {K(0), K(0), K(0), K(0), x.radicands()};
}
template <class K, class R>
Biquadratic<K, R> one_like(const Biquadratic<K, R>& x) {
    return {K(1), K(0), K(0), K(0), x.radicands()};
}
template <class K, class R>
bool is_zero(const Biquadratic<K, R>& x) {
    return x.is_zero();
}
template <class K, class R>
std::size_t complexity(const Biquadratic<K, R>& x) {
    return x.complexity();
}
template <class K, class R>
std::string to_string(const Biquadratic<K, R>& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

using TowerElem = Biquadratic<RatFunc, TowerRadicands>;
/// The tower evaluated at a rational t0: Q[s, w] / (s^2 - (t0^2-1), w^2 - (t0^2+2)).
using BiquadElem = Biquadratic<BigRational, RationalRadicands>;

namespace tower {
inline TowerElem t() { return TowerElem(RatFunc::t()); }
inline TowerElem s() { return {RatFunc(0), RatFunc(1), RatFunc(0), RatFunc(0)}; }
inline TowerElem w() { return {RatFunc(0), RatFunc(0), RatFunc(1), RatFunc(0)}; }
} // namespace tower

/// The involution sqrt(t^2-1) -> -sqrt(t^2-1).
inline TowerElem tau_s(const TowerElem& x) { return x.conj_s(); }
inline TowerElem tower_inverse(const TowerElem& x) { return x.inverse(); }

/// A point t0 together with chosen values of s and w in Q(sqrt d).
class Specialization {
public:
    Specialization(BigRational t0, std::int64_t d, QuadElem s_value, std::optional<QuadElem> w_value = std::nullopt)
        : t0_(std::move(t0)), d_(d), s_(std::move(s_value)), w_(std::move(w_value)) {
        if (d_ < 2 || !is_squarefree(d_)) fail(ErrorCode::InvalidD, "specialization needs square-free d >= 2");
        if (s_ * s_ != QuadElem(t0_ * t0_ - 1))
            fail(ErrorCode::InvalidSpecialization, "s value does not square to t0^2 - 1");
        if (w_ && *w_ * *w_ != QuadElem(t0_ * t0_ + 2))
            fail(ErrorCode::InvalidSpecialization, "w value does not square to t0^2 + 2");
        if (s_.d() != 0 && s_.d() != d_) fail(ErrorCode::DomainMismatch, "s value lies in another field");
        if (w_ && w_->d() != 0 && w_->d() != d_) fail(ErrorCode::DomainMismatch, "w value lies in another field");
    }

    /// t = t, s = y*sqrt(d) for a solution of t^2 - d*y^2 = 1.
    static Specialization pell(const BigInt& t, const BigInt& y, std::int64_t d) {
        return Specialization(BigRational(t), d, QuadElem(0, BigRational(y), d));
    }

    const BigRational& t0() const noexcept { return t0_; }
    std::int64_t d() const noexcept { return d_; }
    const QuadElem& s_value() const noexcept { return s_; }
    const std::optional<QuadElem>& w_value() const noexcept { return w_; }

private:
    BigRational t0_;
    std::int64_t d_;
    QuadElem s_;
    std::optional<QuadElem> w_;
};

inline QuadElem specialize(const TowerElem& x, const Specialization& spec) {
    const QuadElem zero(0, 0, spec.d());
    QuadElem r = zero + QuadElem(x.c00().eval(spec.t0()));
    if (!x.c10().is_zero()) r += QuadElem(x.c10().eval(spec.t0())) * spec.s_value();
    if (!x.free_of_w()) {
        if (!spec.w_value()) fail(ErrorCode::MissingRadicalValue, "element involves w but no w value was given");
        const QuadElem& w = *spec.w_value();
        if (!x.c01().is_zero()) r += QuadElem(x.c01().eval(spec.t0())) * w;
        if (!x.c11().is_zero()) r += QuadElem(x.c11().eval(spec.t0())) * spec.s_value() * w;
    }
    return r;
}

/// Value at a rational t0 inside Q[s, w] / (s^2 - (t0^2-1), w^2 - (t0^2+2)).
inline BiquadElem specialize_biquadratic(const TowerElem& x, const BigRational& t0) {
    RationalRadicands rad(t0 * t0 - 1, t0 * t0 + 2);
    return {x.c00().eval(t0), x.c10().eval(t0), x.c01().eval(t0), x.c11().eval(t0), rad};
}

/// Value at an integer t0 with s -> i (so s^2 = t0^2 - 1 needs t0 = 0).
inline GaussianInt specialize_gaussian(const TowerElem& x, const BigInt& t0) {
    if (t0 != 0) fail(ErrorCode::InvalidSpecialization, "s -> i is only consistent at t = 0");
    if (!x.free_of_w()) fail(ErrorCode::InvalidSpecialization, "element involves w");
    const BigRational re = x.c00().eval(BigRational(t0));
    const BigRational im = x.c10().eval(BigRational(t0));
    if (re.get_den() != 1 || im.get_den() != 1)
        fail(ErrorCode::NonIntegralEntry, "value at t = 0 is not a Gaussian integer");
    return {re.get_num(), im.get_num()};
}

} // namespace syslat
