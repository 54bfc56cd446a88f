#pragma once

// Conjugate transposes, invariant sesquilinear forms, intertwiners and
// signatures of diagonal forms.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "syslat/linalg.hpp"
#include "syslat/quadratic.hpp"
#include "syslat/tower.hpp"

namespace syslat {

// The involution each coefficient domain carries: sqrt(d) -> -sqrt(d) on
// Q(sqrt d), s -> -s on the tower, complex conjugation on Z[i], identity on
// the rational domains.
inline BigRational involute(const BigRational& x) { return x; }
inline RatFunc involute(const RatFunc& x) { return x; }
inline QuadElem involute(const QuadElem& x) { return tau(x); }
inline GaussianInt involute(const GaussianInt& x) { return x.conj(); }
template <class K, class R>
Biquadratic<K, R> involute(const Biquadratic<K, R>& x) {
    return x.conj_s();
}

enum class Involution {
    Trivial, // plain transpose
    Galois,  // the domain's conjugation, then transpose
};

template <class T>
T apply(Involution inv, const T& x) {
    return inv == Involution::Galois ? involute(x) : x;
}

/// M* = tau(M)^T.
template <class T>
Matrix<T> star(const Matrix<T>& m, Involution inv = Involution::Galois) {
    Matrix<T> r(m.cols(), m.rows(), m.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = apply(inv, m(i, j));
    return r;
}

template <class T>
struct HermitianForm {
    Matrix<T> matrix;
    Involution involution = Involution::Galois;

    bool is_sesquisymmetric() const { return star(matrix, involution) == matrix; }
    /// g* J g == J.
    bool preserved_by(const Matrix<T>& g) const { return star(g, involution) * matrix * g == matrix; }
};

template <class T>
struct InvariantFormSpace {
    /// Nullspace basis, one matrix per free variable in increasing column order.
    std::vector<Matrix<T>> basis;
    /// B + B* for each basis element B.
    std::vector<HermitianForm<T>> hermitian;
    /// Row-major positions of the free variables.
    std::vector<std::size_t> free_positions;

    std::size_t dimension() const noexcept { return basis.size(); }
};

/// All J with g* J g = J for every generator g, as a basis over the
/// coefficient field, together with sesqui-symmetric representatives.
template <class T>
InvariantFormSpace<T> solve_invariant_forms(const std::vector<Matrix<T>>& gens, Involution inv) {
    if (gens.empty()) fail(ErrorCode::InvalidArgument, "no generators given");
    const std::size_t n = gens.front().rows();
    for (const auto& g : gens)
        if (!g.is_square() || g.rows() != n) fail(ErrorCode::NonSquare, "generators must be square of equal size");
    const T zero = gens.front().zero();
    const T one = gens.front().one();
    // Row (a, b) of block g, column (i, j): conj(g(i,a)) g(j,b) - [i=a][j=b].
    Matrix<T> sys(gens.size() * n * n, n * n, zero);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const Matrix<T>& g = gens[k];
        const Matrix<T> gc = g.map([inv](const T& x) { return apply(inv, x); });
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t row = k * n * n + a * n + b;
                for (std::size_t i = 0; i < n; ++i) {
                    if (is_zero(gc(i, a))) continue;
                    for (std::size_t j = 0; j < n; ++j) {
                        if (is_zero(g(j, b))) continue;
                        sys(row, i * n + j) = gc(i, a) * g(j, b);
                    }
                }
                sys(row, a * n + b) = sys(row, a * n + b) - one;
            }
    }
    const EchelonForm<T> e = rref(sys);
    InvariantFormSpace<T> out;
    out.free_positions = free_columns(e, n * n);
    for (std::size_t f : out.free_positions) {
        std::vector<T> v(n * n, zero);
        v[f] = one;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, f);
        Matrix<T> b(n, n, std::move(v));
        HermitianForm<T> h{b + star(b, inv), inv};
        out.basis.push_back(std::move(b));
        out.hermitian.push_back(std::move(h));
    }
    return out;
}

/// True when a = lambda * b for some lambda; returns lambda.
template <class T>
std::optional<T> proportionality(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    std::optional<T> lambda;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const bool za = is_zero(a(i, j));
            const bool zb = is_zero(b(i, j));
            if (za != zb) return std::nullopt;
            if (za) continue;
            T q = a(i, j) / b(i, j);
            if (!lambda) lambda = std::move(q);
            else if (!(*lambda == q)) return std::nullopt;
        }
    return lambda;
}

/// Basis of {P : P A_i = B_i P for all i}.
template <class T>
std::vector<Matrix<T>> intertwiner_space(const std::vector<Matrix<T>>& a_gens, const std::vector<Matrix<T>>& b_gens) {
    if (a_gens.size() != b_gens.size() || a_gens.empty())
        fail(ErrorCode::InvalidArgument, "generator lists must be non-empty and of equal length");
    const std::size_t n = a_gens.front().rows();
    for (std::size_t k = 0; k < a_gens.size(); ++k)
        if (!a_gens[k].is_square() || !b_gens[k].is_square() || a_gens[k].rows() != n || b_gens[k].rows() != n)
            fail(ErrorCode::NonSquare, "generators must be square of equal size");
    const T zero = a_gens.front().zero();
    // Row (r, c) of block k: sum_m P(r,m) A(m,c) - sum_m B(r,m) P(m,c).
    Matrix<T> sys(a_gens.size() * n * n, n * n, zero);
    for (std::size_t k = 0; k < a_gens.size(); ++k) {
        const Matrix<T>& a = a_gens[k];
        const Matrix<T>& b = b_gens[k];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t row = k * n * n + r * n + c;
                for (std::size_t m = 0; m < n; ++m) {
                    if (!is_zero(a(m, c))) sys(row, r * n + m) = sys(row, r * n + m) + a(m, c);
                    if (!is_zero(b(r, m))) sys(row, m * n + c) = sys(row, m * n + c) - b(r, m);
                }
            }
    }
    std::vector<Matrix<T>> out;
    for (auto& v : solve_nullspace(sys)) out.emplace_back(n, n, std::move(v));
    return out;
}

/// An invertible P with P A_i = B_i P, chosen as a small random integer
/// combination of the intertwiner basis (seeded, bounded retries).
template <class T>
std::optional<Matrix<T>> solve_conjugator(const std::vector<Matrix<T>>& a_gens, const std::vector<Matrix<T>>& b_gens,
                                          std::uint64_t seed = 42, int max_tries = 32) {
    const std::vector<Matrix<T>> space = intertwiner_space(a_gens, b_gens);
    if (space.empty()) return std::nullopt;
    const T one = a_gens.front().one();
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Matrix<T> p(space.front().rows(), space.front().cols(), space.front().zero());
        for (std::size_t k = 0; k < space.size(); ++k) {
            // The first attempt takes the plain sum of the basis.
            const long c = attempt == 0 ? 1 : static_cast<long>(rng() % 7) - 3;
            if (c != 0) p = p + T(c) * one * space[k];
        }
        if (!is_zero(det(p))) return p;
    }
    return std::nullopt;
}

/// Sign of a + b sqrt(d) under the embedding sqrt(d) > 0.
inline int real_sign(const QuadElem& x) {
    const int sa = sgn(x.a());
    const int sb = sgn(x.b());
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
    // Opposite signs: compare a^2 with d b^2.
    const BigRational diff = x.a() * x.a() - BigRational(x.d()) * x.b() * x.b();
    return sgn(diff) > 0 ? sa : sb;
}

struct Signature {
    int positive = 0;
    int negative = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature_of_diagonal(const Matrix<QuadElem>& d) {
    if (!d.is_square()) fail(ErrorCode::NonSquare, "signature of a non-square matrix");
    if (!d.is_diagonal()) fail(ErrorCode::NonDiagonal, "matrix is not diagonal");
    Signature sig;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        const int s = real_sign(d(i, i));
        if (s == 0) fail(ErrorCode::ZeroDiagonalEntry, "zero on the diagonal at " + std::to_string(i));
        (s > 0 ? sig.positive : sig.negative) += 1;
    }
    return sig;
}

} // namespace syslat
