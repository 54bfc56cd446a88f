#pragma once

// Words in abstract generators. A generator is a lowercase letter; its
// inverse is written with the uppercase letter, so "aBA" = a b^-1 a^-1.

#include <cctype>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "syslat/error.hpp"

namespace syslat {

struct Letter {
    char symbol; // lowercase generator name
    int exponent; // +1 or -1

    Letter inverse() const { return {symbol, -exponent}; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word; the empty word is the identity.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::string_view text) {
        for (char ch : text) {
            if (!std::isalpha(static_cast<unsigned char>(ch)))
                fail(ErrorCode::ParseError, std::string("not a generator letter: ") + ch);
            const bool upper = std::isupper(static_cast<unsigned char>(ch)) != 0;
            push({static_cast<char>(std::tolower(static_cast<unsigned char>(ch))), upper ? -1 : 1});
        }
    }
    explicit GroupWord(const std::vector<Letter>& letters) {
        for (const auto& l : letters) push(l);
    }

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    GroupWord inverse() const {
        GroupWord r;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
        return r;
    }

    friend GroupWord operator*(const GroupWord& x, const GroupWord& y) {
        GroupWord r = x;
        for (const auto& l : y.letters_) r.push(l);
        return r;
    }

    GroupWord pow(unsigned k) const {
        GroupWord r;
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    std::string str() const {
        std::string out;
        for (const auto& l : letters_)
            out += l.exponent > 0 ? l.symbol : static_cast<char>(std::toupper(static_cast<unsigned char>(l.symbol)));
        return out;
    }

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord& x, const GroupWord& y) { return x.str() <=> y.str(); }
    friend std::ostream& operator<<(std::ostream& os, const GroupWord& w) { return os << (w.empty() ? "1" : w.str()); }

    /// True when no letter sits next to its own inverse.
    bool is_freely_reduced() const {
        for (std::size_t i = 1; i < letters_.size(); ++i)
            if (letters_[i] == letters_[i - 1].inverse()) return false;
        return true;
    }

private:
    void push(const Letter& l) {
        if (l.exponent != 1 && l.exponent != -1) fail(ErrorCode::InvalidArgument, "letter exponent must be +1 or -1");
        if (!letters_.empty() && letters_.back() == l.inverse()) {
            letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }

    std::vector<Letter> letters_;
};

/// Relators of vol3 in the generators a, b.
inline std::vector<GroupWord> vol3_relators() { return {GroupWord("aabbABAbb"), GroupWord("aBaBabaaab")}; }

/// a in terms of the orbifold generators: u^2 c.
inline GroupWord orbifold_a() { return GroupWord("uuc"); }
/// b in terms of the orbifold generators: (a u a)^-1 u.
inline GroupWord orbifold_b() {
    const GroupWord a = orbifold_a();
    return (a * GroupWord("u") * a).inverse() * GroupWord("u");
}

/// Rewrites a word in a, b into u, c and freely reduces it.
inline GroupWord expand_to_orbifold(const GroupWord& w) {
    const GroupWord a = orbifold_a();
    const GroupWord b = orbifold_b();
    GroupWord r;
    for (const auto& l : w.letters()) {
        const GroupWord* img = nullptr;
        if (l.symbol == 'a') img = &a;
        else if (l.symbol == 'b') img = &b;
        else fail(ErrorCode::MissingGenerator, std::string("expected a word in a, b; found ") + l.symbol);
        r = r * (l.exponent > 0 ? *img : img->inverse());
    }
    return r;
}

} // namespace syslat
