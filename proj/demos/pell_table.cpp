// Pell solutions, primitive primes of 2 t_n and the congruence bounds.
//
//   demo_pell_table [d] [depth]

#include <cstdlib>
#include <iostream>

#include "syslat/syslat.hpp"

int main(int argc, char** argv) {
    const std::int64_t d = argc > 1 ? std::atol(argv[1]) : 3;
    const unsigned depth = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 5;
    try {
        const auto seq = syslat::select_prime_sequence(d, depth, syslat::PrimeRule::LargestPrimitive);
        std::cout << "d = " << d << "\n";
        for (const auto& rec : seq.records) {
            std::cout << "n=" << rec.n << "  t=" << rec.t << "  y=" << rec.y << "  primitive {";
            bool first = true;
            for (const auto& p : rec.primitive_primes) {
                std::cout << (first ? "" : ", ") << p;
                first = false;
            }
            std::cout << "}";
            if (rec.selected)
                std::cout << "  p=" << *rec.selected << "  bound="
                          << syslat::format_bound(syslat::congruence_systole_lower_bound(*rec.selected, 8).value);
            std::cout << "\n";
        }
    } catch (const syslat::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
