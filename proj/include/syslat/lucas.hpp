#pragma once

// Primitive prime divisors of S_n = 2 t_n = u^n + u^-n for the Pell unit u,
// and the rules that pick one prime per index.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syslat/factor.hpp"
#include "syslat/pell.hpp"

namespace syslat {

/// The pair (u, 1/u) for u = t_1 + y_1 sqrt d: sum 2 t_1, product 1.
struct LucasPairCheck {
    BigInt sum;
    BigInt product;
    bool coprime_nonzero = false;
    /// u^2 > 1, so u / u^-1 is not a root of unity.
    bool ratio_not_root_of_unity = false;

    bool holds() const { return coprime_nonzero && ratio_not_root_of_unity; }
};

inline LucasPairCheck verify_lucas_pair(std::int64_t d) {
    const PellSolution f = pell_fundamental(d);
    LucasPairCheck c;
    c.sum = 2 * f.t;
    c.product = f.t * f.t - d * f.y * f.y;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), c.sum.get_mpz_t(), c.product.get_mpz_t());
    c.coprime_nonzero = sgn(c.sum) != 0 && sgn(c.product) != 0 && g == 1;
    c.ratio_not_root_of_unity = f.t > 1;
    return c;
}

/// S_0, ..., S_count with S_0 = 2, S_1 = 2 t_1, S_{n+1} = 2 t_1 S_n - S_{n-1}.
inline std::vector<BigInt> lucas_terms(std::int64_t d, unsigned count) {
    const PellSolution f = pell_fundamental(d);
    std::vector<BigInt> s{BigInt(2)};
    if (count >= 1) s.push_back(2 * f.t);
    while (s.size() <= count) s.push_back(2 * f.t * s.back() - s[s.size() - 2]);
    return s;
}

struct PrimitivePrimeRecord {
    std::int64_t d = 0;
    unsigned n = 0;
    BigInt t;
    BigInt y;
    BigInt s_n;
    Factorization factorization;
    std::set<BigInt> primitive_primes;
    std::optional<BigInt> selected;
};

/// Primes dividing S_n and none of S_1, ..., S_{n-1}.
inline PrimitivePrimeRecord primitive_prime_divisors(std::int64_t d, unsigned n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "index starts at 1");
    if (!verify_lucas_pair(d).holds()) fail(ErrorCode::InvalidD, "(u, 1/u) is not a Lucas pair");
    const PellSolution sol = pell_solution(d, n);
    const std::vector<BigInt> s = lucas_terms(d, n);
    PrimitivePrimeRecord r;
    r.d = d;
    r.n = n;
    r.t = sol.t;
    r.y = sol.y;
    r.s_n = s[n];
    if (r.s_n != 2 * sol.t) fail(ErrorCode::SolverFailed, "S_n differs from 2 t_n");
    r.factorization = factorize(r.s_n);
    for (const auto& [p, e] : r.factorization) {
        bool primitive = true;
        for (unsigned m = 1; m < n && primitive; ++m)
            if (mpz_divisible_p(s[m].get_mpz_t(), p.get_mpz_t()) != 0) primitive = false;
        if (primitive) r.primitive_primes.insert(p);
    }
    return r;
}

enum class PrimeRule { LargestPrimitive, SmallestOddPrimitive, PaperTable };

inline std::string to_string(PrimeRule r) {
    switch (r) {
    case PrimeRule::LargestPrimitive: return "largest-primitive";
    case PrimeRule::SmallestOddPrimitive: return "smallest-odd-primitive";
    case PrimeRule::PaperTable: return "paper-table";
    }
    return "unknown";
}

inline PrimeRule parse_prime_rule(const std::string& s) {
    if (s == "largest-primitive") return PrimeRule::LargestPrimitive;
    if (s == "smallest-odd-primitive") return PrimeRule::SmallestOddPrimitive;
    if (s == "paper-table") return PrimeRule::PaperTable;
    fail(ErrorCode::InvalidArgument, "unknown prime rule " + s);
}

/// The primes listed in the worked examples for d = 3 and d = 5.
inline std::optional<BigInt> table_prime(std::int64_t d, unsigned n) {
    static const std::map<std::int64_t, std::vector<long>> table{{3, {2, 7, 13, 97, 181}},
                                                                 {5, {3, 7, 107, 1103, 2521}}};
    auto it = table.find(d);
    if (it == table.end() || n == 0 || n > it->second.size()) return std::nullopt;
    return BigInt(it->second[n - 1]);
}

struct SelectedPrime {
    unsigned n = 0;
    BigInt t;
    BigInt y;
    BigInt p;
    std::set<BigInt> primitive_primes;
};

struct SkippedIndex {
    unsigned n = 0;
    std::string reason;
};

struct PrimeSequence {
    std::vector<SelectedPrime> rows;
    std::vector<SkippedIndex> skipped;
    std::vector<PrimitivePrimeRecord> records;
};

/// One odd primitive prime per index, strictly increasing along the kept
/// indices. Indices with no admissible prime are reported as skipped.
inline PrimeSequence select_prime_sequence(std::int64_t d, unsigned depth, PrimeRule rule) {
    PrimeSequence out;
    std::optional<BigInt> last;
    for (unsigned n = 1; n <= depth; ++n) {
        PrimitivePrimeRecord rec = primitive_prime_divisors(d, n);
        std::vector<BigInt> odd;
        for (const auto& p : rec.primitive_primes)
            if (p != 2 && (!last || p > *last)) odd.push_back(p);
        std::optional<BigInt> pick;
        if (rule == PrimeRule::PaperTable) {
            auto tp = table_prime(d, n);
            if (tp && std::find(odd.begin(), odd.end(), *tp) != odd.end()) pick = *tp;
        }
        if (!pick && !odd.empty()) pick = rule == PrimeRule::SmallestOddPrimitive ? odd.front() : odd.back();
        if (!pick) {
            bool any_odd = false;
            for (const auto& p : rec.primitive_primes) any_odd = any_odd || p != 2;
            out.skipped.push_back({n, any_odd ? "no odd primitive prime above the previous selection"
                                              : "no odd primitive prime"});
        } else {
            rec.selected = *pick;
            last = *pick;
            out.rows.push_back({n, rec.t, rec.y, *pick, rec.primitive_primes});
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

} // namespace syslat
