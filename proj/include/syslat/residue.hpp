#pragma once

// Residue rings O_d/(p) = F_p[x]/(x^2 - d) and Z[i]/(p) (the d = -1 case),
// and the map f : Z[i]/(p) -> O_d/(p), i -> y*sqrt(d).

#include <memory>
#include <ostream>

#include "syslat/quadratic.hpp"

namespace syslat {

struct ResidueRing {
    BigInt p;
    BigInt d; // reduced into [0, p)

    friend bool operator==(const ResidueRing&, const ResidueRing&) = default;
};

using ResidueRingPtr = std::shared_ptr<const ResidueRing>;

/// F_p[x]/(x^2 - d) for an odd prime p. Whether x^2 - d is irreducible is
/// never decided; only the quotient ring is used.
inline ResidueRingPtr make_residue_ring(const BigInt& p, const BigInt& d) {
    if (p == 2) fail(ErrorCode::EvenPrime, "residue rings modulo 2 are not supported");
    if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        fail(ErrorCode::InvalidArgument, "modulus " + p.get_str() + " is not an odd prime");
    return std::make_shared<const ResidueRing>(ResidueRing{p, mod_floor(d, p)});
}

/// a + b*x in F_p[x]/(x^2 - d).
class ResidueElem {
public:
    ResidueElem() = default;
    ResidueElem(const BigInt& a, const BigInt& b, ResidueRingPtr ring)
        : a_(mod_floor(a, ring->p)), b_(mod_floor(b, ring->p)), ring_(std::move(ring)) {}

    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }
    const ResidueRingPtr& ring() const noexcept { return ring_; }

    friend ResidueElem operator+(const ResidueElem& x, const ResidueElem& y) {
        return {x.a_ + y.a_, x.b_ + y.b_, same_ring(x, y)};
    }
    friend ResidueElem operator-(const ResidueElem& x, const ResidueElem& y) {
        return {x.a_ - y.a_, x.b_ - y.b_, same_ring(x, y)};
    }
    ResidueElem operator-() const { return {-a_, -b_, ring_}; }
    friend ResidueElem operator*(const ResidueElem& x, const ResidueElem& y) {
        const ResidueRingPtr& r = same_ring(x, y);
        return {x.a_ * y.a_ + r->d * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, r};
    }
    ResidueElem& operator+=(const ResidueElem& y) { return *this = *this + y; }

    friend bool operator==(const ResidueElem& x, const ResidueElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.ring_ == y.ring_ || *x.ring_ == *y.ring_);
    }

    friend std::ostream& operator<<(std::ostream& os, const ResidueElem& x) {
        return os << x.a_ << " + " << x.b_ << "*x (mod " << x.ring_->p << ")";
    }

private:
    static const ResidueRingPtr& same_ring(const ResidueElem& x, const ResidueElem& y) {
        if (x.ring_ != y.ring_ && !(*x.ring_ == *y.ring_))
            fail(ErrorCode::DomainMismatch, "residues from different rings");
        return x.ring_;
    }

    BigInt a_{0};
    BigInt b_{0};
    ResidueRingPtr ring_;
};

inline ResidueElem zero_like(const ResidueElem& x) { return {0, 0, x.ring()}; }
inline ResidueElem one_like(const ResidueElem& x) { return {1, 0, x.ring()}; }
inline bool is_zero(const ResidueElem& x) { return sgn(x.a()) == 0 && sgn(x.b()) == 0; }

/// Projection O_d -> O_d/(p). Half-integers are fine because 2 is a unit.
inline ResidueElem reduce_mod_p(const OdElem& x, const ResidueRingPtr& ring) {
    if (mod_floor(BigInt(x.d()), ring->p) != ring->d)
        fail(ErrorCode::DomainMismatch, "ring radicand does not match the element");
    BigInt inv2;
    const BigInt two = 2;
    mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), ring->p.get_mpz_t());
    return {x.p() * inv2, x.q() * inv2, ring};
}

inline ResidueElem reduce_mod_p(const OdElem& x, const BigInt& p) {
    return reduce_mod_p(x, make_residue_ring(p, x.d()));
}

/// Projection Z[i] -> Z[i]/(p) = F_p[x]/(x^2 + 1).
inline ResidueElem reduce_mod_p(const GaussianInt& z, const ResidueRingPtr& ring) {
    if (ring->d != mod_floor(BigInt(-1), ring->p)) fail(ErrorCode::DomainMismatch, "ring is not Z[i]/(p)");
    return {z.re(), z.im(), ring};
}

/// f : Z[i]/(p) -> O_d/(p), 1 -> 1, i -> y*sqrt(d). It is a ring
/// homomorphism exactly when d*y^2 = -1 (mod p).
class GaussianToOd {
public:
    GaussianToOd(const BigInt& y, std::int64_t d, const BigInt& p)
        : y_(y), source_(make_residue_ring(p, -1)), target_(make_residue_ring(p, d)) {
        const BigInt lhs = mod_floor(BigInt(d) * y * y + 1, p);
        if (sgn(lhs) != 0)
            fail(ErrorCode::NotAHomomorphism, "d*y^2 is not -1 modulo " + p.get_str());
    }

    const ResidueRingPtr& source() const noexcept { return source_; }
    const ResidueRingPtr& target() const noexcept { return target_; }

    ResidueElem operator()(const ResidueElem& z) const {
        if (!(*z.ring() == *source_)) fail(ErrorCode::DomainMismatch, "argument is not in Z[i]/(p)");
        return {z.a(), z.b() * y_, target_};
    }
    ResidueElem operator()(const GaussianInt& z) const { return (*this)(reduce_mod_p(z, source_)); }

private:
    BigInt y_;
    ResidueRingPtr source_;
    ResidueRingPtr target_;
};

inline ResidueElem gaussian_hom_f(const GaussianInt& z, const BigInt& y, std::int64_t d, const BigInt& p) {
    return GaussianToOd(y, d, p)(z);
}

} // namespace syslat
