#pragma once

// Pipelines on the vol3 representations: the invariant form of the
// 8-dimensional representation, its conjugacy to rho + rho, the spanning
// word search and the 16-dimensional left-regular representation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syslat/representation.hpp"

namespace syslat {

struct InvariantFormResult {
    std::size_t dimension = 0;
    HermitianForm<TowerElem> form;
    RatFunc determinant;
    RatFunc determinant_sqrt;
    /// 16 (3 - 4t^2)^4 / (1 - 4t^2)^2, the value quoted for a different choice of free variables.
    RatFunc reference_determinant;
    bool ratio_to_reference_is_square = false;
    std::vector<std::size_t> free_positions;
};

inline RatFunc reference_form_determinant() {
    const ZPoly t2 = ZPoly::monomial(4, 2);
    const ZPoly a = ZPoly(3) - t2;
    const ZPoly b = ZPoly(1) - t2;
    return RatFunc(16L) * RatFunc(a * a * a * a, b * b);
}

/// Solves for the forms preserved by omega and fixes the canonical J: the
/// sesqui-symmetric part of the basis vector whose first free variable is 1.
inline InvariantFormResult compute_invariant_form_J() {
    const TowerRep& om = omega_generators();
    const auto space = solve_invariant_forms(std::vector{om.images.at('u'), om.images.at('c')}, Involution::Galois);
    if (space.dimension() != 4)
        fail(ErrorCode::SolverFailed, "expected 4 free variables, found " + std::to_string(space.dimension()));
    InvariantFormResult r;
    r.dimension = space.dimension();
    r.free_positions = space.free_positions;
    r.form = space.hermitian.front();
    const TowerElem d = det(r.form.matrix);
    if (!d.in_base()) fail(ErrorCode::SolverFailed, "determinant of a Hermitian form left the base field");
    r.determinant = d.c00();
    if (r.determinant.is_zero()) fail(ErrorCode::SolverFailed, "canonical form is degenerate");
    auto root = ratfunc_sqrt(r.determinant);
    if (!root) fail(ErrorCode::SolverFailed, "determinant is not a square in Q(t)");
    r.determinant_sqrt = *root;
    r.reference_determinant = reference_form_determinant();
    r.ratio_to_reference_is_square = ratfunc_sqrt(r.determinant / r.reference_determinant).has_value();
    return r;
}

/// The canonical J, computed once.
inline const InvariantFormResult& canonical_form() {
    static const InvariantFormResult r = compute_invariant_form_J();
    return r;
}

struct ConjugacyResult {
    Matrix<TowerElem> conjugator;
    TowerElem determinant;
    bool traces_match = false;
};

/// Finds P with P omega(g) = (rho + rho)(g) P for g in {u, c}.
inline ConjugacyResult verify_double_conjugacy(std::uint64_t seed = 42) {
    const TowerRep& om = omega_generators();
    const TowerRep rr = rho_double();
    ConjugacyResult r;
    r.traces_match = om.images.at('u').trace() == rr.images.at('u').trace() &&
                     om.images.at('c').trace() == rr.images.at('c').trace();
    const std::vector<Matrix<TowerElem>> a{om.images.at('u'), om.images.at('c')};
    const std::vector<Matrix<TowerElem>> b{rr.images.at('u'), rr.images.at('c')};
    auto p = solve_conjugator(a, b, seed);
    if (!p) fail(ErrorCode::NoConjugatorFound, "no invertible intertwiner between omega and rho + rho");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(*p * a[i] == b[i] * *p)) fail(ErrorCode::NoConjugatorFound, "intertwiner check failed");
    r.determinant = det(*p);
    r.conjugator = std::move(*p);
    return r;
}

struct SpanningWords {
    std::vector<GroupWord> words;
    /// Determinant of the 16 x 16 matrix of vectorized images at t = 2.
    BiquadElem certificate;
    std::size_t words_examined = 0;
};

/// Greedy breadth-first search for 16 words whose rho-images span the 4 x 4
/// matrices. Rank decisions are made exactly at t = 2, where s = sqrt 3 and
/// w = sqrt 6.
inline SpanningWords search_spanning_words(std::size_t max_length = 10) {
    const BigRational t0 = 2;
    const auto rho = map_rep(rho_generators(), [&](const TowerElem& x) { return specialize_biquadratic(x, t0); },
                             "Q(sqrt3,sqrt6)");
    const std::size_t n = rho.dim * rho.dim;
    const std::vector<Letter> alphabet{{'u', 1}, {'u', -1}, {'c', 1}};

    struct Node {
        GroupWord word;
        Matrix<BiquadElem> image;
    };
    SpanningWords out;
    std::vector<std::vector<BiquadElem>> rows; // reduced, each with a leading 1
    std::vector<std::size_t> pivots;
    std::vector<std::vector<BiquadElem>> accepted;

    auto try_add = [&](const Node& node) {
        ++out.words_examined;
        std::vector<BiquadElem> v = node.image.vectorize();
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (is_zero(v[pivots[k]])) continue;
            const BiquadElem f = v[pivots[k]];
            for (std::size_t j = 0; j < n; ++j)
                if (!is_zero(rows[k][j])) v[j] = v[j] - f * rows[k][j];
        }
        std::size_t p = 0;
        while (p < n && is_zero(v[p])) ++p;
        if (p == n) return;
        const BiquadElem inv = one_like(v[p]) / v[p];
        for (auto& x : v) x = x * inv;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        out.words.push_back(node.word);
        accepted.push_back(node.image.vectorize());
    };

    std::vector<Node> frontier{{GroupWord(), Matrix<BiquadElem>::identity(rho.dim, rho.one())}};
    try_add(frontier.front());
    for (std::size_t len = 1; len <= max_length && out.words.size() < n; ++len) {
        std::vector<Node> next;
        for (const auto& node : frontier)
            for (const auto& l : alphabet) {
                const auto& ls = node.word.letters();
                if (!ls.empty() && ls.back() == l.inverse()) continue;
                GroupWord w = node.word * GroupWord(std::vector<Letter>{l});
                next.push_back({w, node.image * rho.image(l)});
            }
        for (const auto& node : next) {
            if (out.words.size() == n) break;
            try_add(node);
        }
        frontier = std::move(next);
    }
    if (out.words.size() < n)
        fail(ErrorCode::SearchExhausted, "rank " + std::to_string(out.words.size()) + " after length " +
                                             std::to_string(max_length));
    out.certificate = det(from_columns(accepted));
    return out;
}

struct LeftRegularResult {
    TowerRep eta;
    std::vector<RelationCheck> relations;
    bool integral = false;
    TowerElem trace_u;
    TowerElem trace_c;
};

/// Entry lies in Z[t, s].
inline bool in_integral_tower(const TowerElem& x) {
    return x.free_of_w() && x.c00().as_integer_polynomial().has_value() && x.c10().as_integer_polynomial().has_value();
}

/// Left multiplication by rho(u), rho(c) written in the basis of word images.
inline LeftRegularResult build_left_regular(const std::vector<GroupWord>& words) {
    const TowerRep& rho = rho_generators();
    const std::size_t n = rho.dim * rho.dim;
    if (words.size() != n) fail(ErrorCode::BasisDegenerate, "need exactly " + std::to_string(n) + " words");
    std::vector<Matrix<TowerElem>> basis;
    std::vector<std::vector<TowerElem>> cols;
    for (const auto& w : words) {
        basis.push_back(evaluate_word(w, rho));
        cols.push_back(basis.back().vectorize());
    }
    const Matrix<TowerElem> v = from_columns(cols);
    const std::vector<char> gens{'u', 'c'};
    std::vector<std::vector<TowerElem>> rhs;
    for (char g : gens)
        for (const auto& b : basis) rhs.push_back((rho.images.at(g) * b).vectorize());
    Matrix<TowerElem> x;
    try {
        x = solve(v, from_columns(rhs));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DivisionByZero) fail(ErrorCode::BasisDegenerate, "word images are dependent");
        throw;
    }
    LeftRegularResult r;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Matrix<TowerElem> m(n, n, x.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = x(i, k * n + j);
        r.eta.add(gens[k], std::move(m));
    }
    r.eta.domain = rho.domain;
    r.relations = verify_presentation(r.eta);
    r.integral = true;
    for (const auto& [k, m] : r.eta.images)
        for (const auto& e : m.entries())
            if (!in_integral_tower(e)) r.integral = false;
    r.trace_u = r.eta.images.at('u').trace();
    r.trace_c = r.eta.images.at('c').trace();
    return r;
}

} // namespace syslat
