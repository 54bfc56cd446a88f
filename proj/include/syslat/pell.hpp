#pragma once

// Solutions of t^2 - d y^2 = 1.

#include <cstdint>
#include <utility>
#include <vector>

#include "syslat/rational.hpp"

namespace syslat {

struct PellSolution {
    std::int64_t d = 0;
    unsigned n = 0;
    BigInt t;
    BigInt y;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

inline void require_pell_d(std::int64_t d) {
    if (d < 2 || !is_squarefree(d)) fail(ErrorCode::InvalidD, "d must be square-free and >= 2, got " + std::to_string(d));
}

inline bool satisfies_pell(const BigInt& t, const BigInt& y, std::int64_t d) { return t * t - d * y * y == 1; }

/// Minimal positive solution from the continued fraction of sqrt(d).
inline PellSolution pell_fundamental(std::int64_t d) {
    require_pell_d(d);
    BigInt a0;
    mpz_sqrt(a0.get_mpz_t(), BigInt(d).get_mpz_t());
    // sqrt(d) = [a0; a1, a2, ...] with m_{k+1} = d_k a_k - m_k,
    // d_{k+1} = (d - m_{k+1}^2) / d_k, a_{k+1} = floor((a0 + m_{k+1}) / d_{k+1}).
    BigInt m = 0, den = 1, a = a0;
    BigInt h_prev = 1, h = a0;
    BigInt k_prev = 0, k = 1;
    while (!satisfies_pell(h, k, d)) {
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        BigInt h_next = a * h + h_prev;
        BigInt k_next = a * k + k_prev;
        h_prev = std::exchange(h, std::move(h_next));
        k_prev = std::exchange(k, std::move(k_next));
    }
    return {d, 1, h, k};
}

/// (t_n, y_n) from (t_1 + y_1 sqrt d)^n by binary powering, cross-checked
/// against t_{n+1} = 2 t_1 t_n - t_{n-1}.
inline PellSolution pell_solution(std::int64_t d, unsigned n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "Pell index starts at 1");
    const PellSolution f = pell_fundamental(d);
    BigInt rt = 1, ry = 0;          // result
    BigInt bt = f.t, by = f.y;      // base
    for (unsigned e = n; e != 0; e >>= 1) {
        if (e & 1U) {
            BigInt nt = rt * bt + d * ry * by;
            BigInt ny = rt * by + ry * bt;
            rt = std::move(nt);
            ry = std::move(ny);
        }
        BigInt nt = bt * bt + d * by * by;
        BigInt ny = 2 * bt * by;
        bt = std::move(nt);
        by = std::move(ny);
    }
    BigInt t0 = 1, t1 = f.t, y0 = 0, y1 = f.y;
    for (unsigned i = 1; i < n; ++i) {
        BigInt t2 = 2 * f.t * t1 - t0;
        BigInt y2 = 2 * f.t * y1 - y0;
        t0 = std::exchange(t1, std::move(t2));
        y0 = std::exchange(y1, std::move(y2));
    }
    if (t1 != rt || y1 != ry || !satisfies_pell(rt, ry, d))
        fail(ErrorCode::SolverFailed, "powering and recurrence disagree");
    return {d, n, rt, ry};
}

/// The first n solutions.
inline std::vector<PellSolution> pell_sequence(std::int64_t d, unsigned count) {
    std::vector<PellSolution> out;
    if (count == 0) return out;
    const PellSolution f = pell_fundamental(d);
    BigInt t_prev = 1, y_prev = 0, t = f.t, y = f.y;
    for (unsigned n = 1; n <= count; ++n) {
        out.push_back({d, n, t, y});
        BigInt t_next = 2 * f.t * t - t_prev;
        BigInt y_next = 2 * f.t * y - y_prev;
        t_prev = std::exchange(t, std::move(t_next));
        y_prev = std::exchange(y, std::move(y_next));
    }
    return out;
}

} // namespace syslat
