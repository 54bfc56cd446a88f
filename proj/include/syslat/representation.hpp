#pragma once

// Representations given by generator images, word evaluation and relator
// checks.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syslat/appendix.hpp"
#include "syslat/hermitian.hpp"
#include "syslat/linalg.hpp"
#include "syslat/word.hpp"

namespace syslat {

template <class T>
struct RepGenerators {
    std::size_t dim = 0;
    std::map<char, Matrix<T>> images;
    std::map<char, Matrix<T>> inverses;
    std::string domain;

    /// Adds g together with an inverse the caller already knows.
    void add(char symbol, Matrix<T> image, Matrix<T> inv) {
        if (!image.is_square() || (dim != 0 && image.rows() != dim))
            fail(ErrorCode::NonSquare, std::string("image of ") + symbol + " has the wrong shape");
        dim = image.rows();
        images[symbol] = std::move(image);
        inverses[symbol] = std::move(inv);
    }
    /// Adds g and computes its inverse by exact elimination.
    void add(char symbol, Matrix<T> image) {
        Matrix<T> inv = inverse(image);
        add(symbol, std::move(image), std::move(inv));
    }

    const Matrix<T>& image(const Letter& l) const {
        const auto& table = l.exponent > 0 ? images : inverses;
        auto it = table.find(l.symbol);
        if (it == table.end()) fail(ErrorCode::MissingGenerator, std::string("no image for generator ") + l.symbol);
        return it->second;
    }

    T one() const {
        if (images.empty()) fail(ErrorCode::MissingGenerator, "representation has no generators");
        return images.begin()->second.one();
    }
};

/// Applies f entrywise to every image and inverse.
template <class T, class F>
auto map_rep(const RepGenerators<T>& rep, F&& f, std::string domain) {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    RepGenerators<U> out;
    for (const auto& [k, m] : rep.images) out.add(k, m.map(f), rep.inverses.at(k).map(f));
    out.domain = std::move(domain);
    return out;
}

template <class T>
Matrix<T> evaluate_word(const GroupWord& w, const RepGenerators<T>& rep) {
    Matrix<T> acc = Matrix<T>::identity(rep.dim, rep.one());
    for (const auto& l : w.letters()) acc = acc * rep.image(l);
    return acc;
}

struct RelationCheck {
    std::string relation;
    bool pass = false;
};

inline std::vector<std::pair<std::string, GroupWord>> orbifold_relations() {
    std::vector<std::pair<std::string, GroupWord>> out{{"u^4", GroupWord("uuuu")}, {"c^2", GroupWord("cc")}};
    for (const auto& r : vol3_relators()) out.emplace_back(r.str(), expand_to_orbifold(r));
    return out;
}

/// u^4, c^2 and both vol3 relators (pulled back through a = u^2 c,
/// b = (aua)^-1 u) must evaluate to the identity.
template <class T>
std::vector<RelationCheck> verify_presentation(const RepGenerators<T>& rep) {
    std::vector<RelationCheck> out;
    for (const auto& [name, word] : orbifold_relations()) out.push_back({name, evaluate_word(word, rep).is_identity()});
    return out;
}

inline bool all_pass(const std::vector<RelationCheck>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

using TowerRep = RepGenerators<TowerElem>;

/// The 4-dimensional representation over Q(t)(s, w).
inline const TowerRep& rho_generators() {
    static const TowerRep rep = [] {
        TowerRep r;
        r.add('u', appendix_matrix("rho_u"));
        r.add('c', appendix_matrix("rho_c"));
        r.domain = "Q(t)(s,w)";
        return r;
    }();
    return rep;
}

/// The integral 8-dimensional representation over Z[t, s].
inline const TowerRep& omega_generators() {
    static const TowerRep rep = [] {
        TowerRep r;
        r.add('u', appendix_matrix("omega_u"));
        r.add('c', appendix_matrix("omega_c"));
        r.domain = "Z[t,s]";
        return r;
    }();
    return rep;
}

/// rho + rho as an 8-dimensional representation.
inline TowerRep rho_double() {
    const TowerRep& rho = rho_generators();
    TowerRep r;
    for (const auto& [k, m] : rho.images) {
        const auto& inv = rho.inverses.at(k);
        r.add(k, block_diagonal(m, m), block_diagonal(inv, inv));
    }
    r.domain = rho.domain;
    return r;
}

/// The diagonal form preserved by rho.
inline HermitianForm<TowerElem> m_form() { return {appendix_matrix("m_form"), Involution::Galois}; }

/// Images of a = u^2 c and b = (aua)^-1 u.
template <class T>
RepGenerators<T> derive_ab(const RepGenerators<T>& rep) {
    RepGenerators<T> out;
    const GroupWord a = orbifold_a();
    const GroupWord b = orbifold_b();
    out.add('a', evaluate_word(a, rep), evaluate_word(a.inverse(), rep));
    out.add('b', evaluate_word(b, rep), evaluate_word(b.inverse(), rep));
    out.domain = rep.domain;
    return out;
}

/// Word images at t = 0 with s -> i.
inline RepGenerators<GaussianInt> omega_at_zero() {
    return map_rep(omega_generators(), [](const TowerElem& x) { return specialize_gaussian(x, 0); }, "Z[i]");
}

} // namespace syslat
