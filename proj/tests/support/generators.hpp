#pragma once

// Seeded random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "syslat/syslat.hpp"

namespace gen {

using namespace syslat;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    long integer(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (engine_() & 1U) != 0; }

    BigRational rational(long range = 9) {
        const long den = integer(1, range);
        return make_rational(integer(-range, range), den);
    }
    BigRational nonzero_rational(long range = 9) {
        for (;;) {
            BigRational q = rational(range);
            if (sgn(q) != 0) return q;
        }
    }
    QuadElem quad(std::int64_t d, long range = 9) { return QuadElem(rational(range), rational(range), d); }
    QuadElem nonzero_quad(std::int64_t d) {
        for (;;) {
            QuadElem x = quad(d);
            if (!is_zero(x)) return x;
        }
    }
    /// Element of O_d as (p + q sqrt d)/2 with the right parity.
    OdElem od(std::int64_t d, long range = 20) {
        BigInt p = integer(-range, range);
        BigInt q = integer(-range, range);
        if (d % 4 == 1) {
            if ((mpz_odd_p(p.get_mpz_t()) != 0) != (mpz_odd_p(q.get_mpz_t()) != 0)) q += 1;
        } else {
            p *= 2;
            q *= 2;
        }
        return OdElem(p, q, d);
    }
    ZPoly poly(int max_degree = 3, long range = 5) {
        std::vector<BigInt> c;
        const int deg = static_cast<int>(integer(0, max_degree));
        for (int i = 0; i <= deg; ++i) c.emplace_back(integer(-range, range));
        return ZPoly(std::move(c));
    }
    ZPoly nonzero_poly(int max_degree = 3) {
        for (;;) {
            ZPoly p = poly(max_degree);
            if (!p.is_zero()) return p;
        }
    }
    RatFunc ratfunc(int max_degree = 2) { return RatFunc(rational()) * RatFunc(poly(max_degree), nonzero_poly(max_degree)); }
    RatFunc nonzero_ratfunc(int max_degree = 2) {
        for (;;) {
            RatFunc r = ratfunc(max_degree);
            if (!r.is_zero()) return r;
        }
    }
    TowerElem tower(int max_degree = 1) {
        return {ratfunc(max_degree), ratfunc(max_degree), ratfunc(max_degree), ratfunc(max_degree)};
    }
    TowerElem nonzero_tower() {
        for (;;) {
            TowerElem x = tower();
            if (!x.is_zero()) return x;
        }
    }
    Matrix<BigRational> rational_matrix(std::size_t r, std::size_t c, long range = 5) {
        Matrix<BigRational> m(r, c, BigRational(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = BigRational(integer(-range, range));
        return m;
    }
    GaussianInt gaussian(long range = 20) { return {BigInt(integer(-range, range)), BigInt(integer(-range, range))}; }

private:
    std::mt19937_64 engine_;
};

} // namespace gen
