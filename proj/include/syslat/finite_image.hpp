#pragma once

// Breadth-first enumeration of a finite matrix group given by generator
// images, with a shortest-word transversal and Schreier generators of the
// kernel of the word map.

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "syslat/representation.hpp"

namespace syslat {

template <class T>
std::string matrix_key(const Matrix<T>& m) {
    std::string key;
    for (const auto& x : m.entries()) serialize(x, key);
    return key;
}

struct FiniteImage {
    std::vector<Letter> letters;              // generators followed by inverses
    std::vector<Matrix<GaussianInt>> elements; // BFS order; element 0 is the identity
    std::vector<GroupWord> transversal;        // shortest word for each element
    std::vector<std::vector<std::size_t>> right_action; // index of element * letter
    std::unordered_map<std::string, std::size_t> index;

    std::size_t order() const noexcept { return elements.size(); }
};

/// Closure of the identity under right multiplication by the named
/// generators and their inverses. Throws CapExceeded beyond `cap` elements.
inline FiniteImage enumerate_image(const RepGenerators<GaussianInt>& rep, const std::string& symbols,
                                   std::size_t cap = 1000000) {
    FiniteImage img;
    for (char c : symbols) img.letters.push_back({c, 1});
    for (char c : symbols) img.letters.push_back({c, -1});
    std::vector<const Matrix<GaussianInt>*> mats;
    for (const auto& l : img.letters) mats.push_back(&rep.image(l));

    const auto id = Matrix<GaussianInt>::identity(rep.dim, GaussianInt(1));
    img.index.emplace(matrix_key(id), 0);
    img.elements.push_back(id);
    img.transversal.emplace_back();
    for (std::size_t head = 0; head < img.elements.size(); ++head) {
        std::vector<std::size_t> row(img.letters.size());
        for (std::size_t k = 0; k < img.letters.size(); ++k) {
            Matrix<GaussianInt> next = img.elements[head] * *mats[k];
            std::string key = matrix_key(next);
            auto it = img.index.find(key);
            if (it == img.index.end()) {
                if (img.elements.size() >= cap)
                    fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " elements");
                it = img.index.emplace(std::move(key), img.elements.size()).first;
                img.elements.push_back(std::move(next));
                img.transversal.push_back(img.transversal[head] * GroupWord(std::vector<Letter>{img.letters[k]}));
            }
            row[k] = it->second;
        }
        img.right_action.push_back(std::move(row));
    }
    return img;
}

/// Schreier generators r g (rep(r g))^-1 of the kernel, for every
/// transversal word r and letter g. Trivial words are dropped, and a word
/// is dropped when it or its inverse was already listed.
inline std::vector<GroupWord> schreier_kernel_generators(const FiniteImage& img) {
    std::vector<GroupWord> out;
    std::set<std::string> seen;
    for (std::size_t r = 0; r < img.order(); ++r)
        for (std::size_t k = 0; k < img.letters.size(); ++k) {
            const GroupWord w = img.transversal[r] * GroupWord(std::vector<Letter>{img.letters[k]}) *
                                img.transversal[img.right_action[r][k]].inverse();
            if (w.empty()) continue;
            if (seen.count(w.str()) || seen.count(w.inverse().str())) continue;
            seen.insert(w.str());
            out.push_back(w);
        }
    return out;
}

/// Order of the element g in the image, by repeated multiplication.
inline std::size_t element_order(const FiniteImage& img, std::size_t letter) {
    std::size_t idx = img.right_action[0][letter];
    std::size_t k = 1;
    while (idx != 0) {
        idx = img.right_action[idx][letter];
        ++k;
    }
    return k;
}

/// Order, generator letters and the shortest-word transversal.
inline nlohmann::json to_json(const FiniteImage& img) {
    std::vector<std::string> letters, transversal;
    for (const auto& l : img.letters) letters.push_back(GroupWord(std::vector<Letter>{l}).str());
    for (const auto& w : img.transversal) transversal.push_back(w.empty() ? "1" : w.str());
    return {{"order", img.order()}, {"generators", letters}, {"transversal", transversal}};
}

} // namespace syslat
