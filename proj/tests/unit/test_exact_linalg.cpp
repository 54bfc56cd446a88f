#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "generators.hpp"

using namespace syslat;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

// Leibniz expansion over all permutations.
BigRational leibniz_det(const Matrix<BigRational>& m) {
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    BigRational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        BigRational term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Matrix<BigRational> rational_matrix(std::size_t r, std::size_t c, std::vector<long> v) {
    std::vector<BigRational> e(v.begin(), v.end());
    return {r, c, std::move(e)};
}

Matrix<QuadElem> quad_matrix(std::size_t n, std::vector<QuadElem> v) { return {n, n, std::move(v)}; }

} // namespace

TEST(Det, MatchesLeibnizExpansion) {
    gen::Rng rng(20);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int i = 0; i < 15; ++i) {
            const auto m = rng.rational_matrix(n, n);
            EXPECT_EQ(det(m), leibniz_det(m));
        }
}

TEST(Det, IsMultiplicative) {
    gen::Rng rng(21);
    for (int i = 0; i < 20; ++i) {
        const auto a = rng.rational_matrix(4, 4), b = rng.rational_matrix(4, 4);
        EXPECT_EQ(det(a * b), det(a) * det(b));
    }
    // Over Q(sqrt 3).
    for (int i = 0; i < 10; ++i) {
        std::vector<QuadElem> va, vb;
        for (int k = 0; k < 9; ++k) {
            va.push_back(rng.quad(3));
            vb.push_back(rng.quad(3));
        }
        const auto a = quad_matrix(3, va), b = quad_matrix(3, vb);
        EXPECT_EQ(det(a * b), det(a) * det(b));
    }
}

TEST(Det, RejectsNonSquare) {
    expect_error(ErrorCode::NonSquare, [] { det(Matrix<BigRational>(2, 3)); });
}

TEST(Nullspace, RecoversAKnownKernel) {
    // Columns 3 and 4 are combinations of the first two, so the kernel is spanned by known vectors.
    gen::Rng rng(22);
    for (int i = 0; i < 20; ++i) {
        const auto base = rng.rational_matrix(4, 2);
        const BigRational a = rng.rational(), b = rng.rational(), c = rng.rational(), d = rng.rational();
        Matrix<BigRational> m(4, 4);
        for (std::size_t r = 0; r < 4; ++r) {
            m(r, 0) = base(r, 0);
            m(r, 1) = base(r, 1);
            m(r, 2) = a * base(r, 0) + b * base(r, 1);
            m(r, 3) = c * base(r, 0) + d * base(r, 1);
        }
        const auto ns = solve_nullspace(m);
        EXPECT_EQ(ns.size(), 4 - rank(m));
        for (const auto& v : ns) {
            for (const auto& x : m * v) EXPECT_EQ(x, 0);
        }
        if (rank(base) == 2) {
            ASSERT_EQ(ns.size(), 2U);
            // The constructed kernel vectors lie in the span of the computed ones.
            const std::vector<BigRational> k1{a, b, -1, 0}, k2{c, d, 0, -1};
            for (const auto& k : {k1, k2}) {
                const auto span = from_columns(std::vector{ns[0], ns[1], k});
                EXPECT_EQ(rank(span), 2U);
            }
        }
    }
}

TEST(Solve, InverseAndSingular) {
    gen::Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        const auto m = rng.rational_matrix(4, 4);
        if (det(m) == 0) {
            expect_error(ErrorCode::DivisionByZero, [&] { inverse(m); });
            continue;
        }
        EXPECT_TRUE((m * inverse(m)).is_identity());
    }
    expect_error(ErrorCode::DivisionByZero, [] { inverse(rational_matrix(2, 2, {1, 2, 2, 4})); });
}

TEST(Solve, TowerMatrixInverse) {
    const TowerElem t = tower::t(), s = tower::s();
    Matrix<TowerElem> m(2, 2, TowerElem());
    m(0, 0) = t;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = t;
    // det = t^2 - (t^2 - 1) = 1.
    EXPECT_EQ(det(m), TowerElem(1));
    EXPECT_TRUE((m * inverse(m)).is_identity());
}

TEST(InvariantForms, PermutationGroupHasOrbitCountDimension) {
    // The cyclic permutation of three coordinates preserves exactly the circulant forms.
    const auto p = rational_matrix(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    const auto space = solve_invariant_forms(std::vector{p}, Involution::Trivial);
    EXPECT_EQ(space.dimension(), 3U);
    for (const auto& b : space.basis) EXPECT_TRUE(p.transpose() * b * p == b);
    for (const auto& h : space.hermitian) EXPECT_TRUE(h.is_sesquisymmetric());
}

TEST(InvariantForms, GaloisHermitianForUnitaryDiagonal) {
    // g = diag(x, y) with x tau(x) = 1 preserves every diagonal Hermitian form.
    const QuadElem x(make_rational(2, 1), 1, 3);   // norm 1
    const QuadElem y(make_rational(7, 1), 4, 3);   // norm 1
    const QuadElem z(0, 0, 3);
    const auto g = quad_matrix(2, {x, z, z, y});
    const auto space = solve_invariant_forms(std::vector{g}, Involution::Galois);
    EXPECT_EQ(space.dimension(), 2U);
    for (const auto& h : space.hermitian) {
        EXPECT_TRUE(h.is_sesquisymmetric());
        EXPECT_TRUE(h.preserved_by(g));
        EXPECT_TRUE(h.matrix.is_diagonal());
    }
}

TEST(Proportionality, Examples) {
    const auto a = rational_matrix(2, 2, {1, 2, 3, 4});
    EXPECT_EQ(proportionality(BigRational(3) * a, a), BigRational(3));
    EXPECT_FALSE(proportionality(a, rational_matrix(2, 2, {1, 2, 3, 5})).has_value());
}

TEST(Conjugator, FindsIntertwinerForConjugateGenerators) {
    gen::Rng rng(24);
    const auto q = rational_matrix(3, 3, {1, 2, 0, 0, 1, 3, 1, 0, 1});
    ASSERT_NE(det(q), 0);
    const auto qi = inverse(q);
    const auto a1 = rational_matrix(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    const auto a2 = rational_matrix(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    const std::vector<Matrix<BigRational>> as{a1, a2};
    const std::vector<Matrix<BigRational>> bs{q * a1 * qi, q * a2 * qi};
    const auto p = solve_conjugator(as, bs, 42);
    ASSERT_TRUE(p.has_value());
    EXPECT_NE(det(*p), 0);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(*p * as[i], bs[i] * *p);
    // Non-conjugate generators: different traces.
    const std::vector<Matrix<BigRational>> cs{Matrix<BigRational>::identity(3), a2};
    EXPECT_FALSE(solve_conjugator(as, cs, 42).has_value());
}

TEST(Signature, Examples) {
    const QuadElem z(0, 0, 3);
    const auto d = quad_matrix(3, {QuadElem(1, 0, 3), z, z, z, QuadElem(-2, 1, 3), z, z, z, QuadElem(2, -1, 3)});
    EXPECT_EQ(signature_of_diagonal(d), (Signature{2, 1}));
    expect_error(ErrorCode::NonDiagonal,
                 [&] { signature_of_diagonal(quad_matrix(2, {QuadElem(1, 0, 3), QuadElem(1, 0, 3), z, z})); });
    expect_error(ErrorCode::ZeroDiagonalEntry,
                 [&] { signature_of_diagonal(quad_matrix(2, {QuadElem(1, 0, 3), z, z, z})); });
}

TEST(Signature, RealSignMatchesFloatingPoint) {
    gen::Rng rng(25);
    for (int i = 0; i < 200; ++i) {
        const QuadElem x = rng.nonzero_quad(5);
        const double v = x.a().get_d() + x.b().get_d() * std::sqrt(5.0);
        if (std::abs(v) < 1e-9) continue;
        EXPECT_EQ(real_sign(x), v > 0 ? 1 : -1) << x;
    }
}
