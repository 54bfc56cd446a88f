// Solves for the forms preserved by the 8-dimensional representation and
// prints the determinant of the canonical one together with its square root.

#include <iostream>

#include "syslat/syslat.hpp"

int main() {
    const auto& jf = syslat::canonical_form();
    std::cout << "invariant forms: " << jf.dimension << " free variables at positions";
    for (auto p : jf.free_positions) std::cout << " " << p;
    std::cout << "\ndet J      = " << jf.determinant << "\n";
    std::cout << "sqrt det J = " << jf.determinant_sqrt << "\n";
    std::cout << "ratio to 16(3-4t^2)^4/(1-4t^2)^2 is a square: " << (jf.ratio_to_reference_is_square ? "yes" : "no")
              << "\n";

    // The same form at the first Pell point for d = 3.
    const auto ctx = syslat::make_su_context(syslat::pell_solution(3, 1));
    std::cout << "det J at t = 2: " << syslat::det(ctx.form.matrix) << "\n";
}
