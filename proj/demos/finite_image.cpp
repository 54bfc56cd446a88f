// Enumerates the image of the representation at t = 0 and checks the
// Schreier generators of its kernel at the level (d, n, p) = (3, 2, 7).

#include <iostream>

#include "syslat/syslat.hpp"

int main() {
    const auto ab = syslat::derive_ab(syslat::omega_at_zero());
    const auto img = syslat::enumerate_image(ab, "ab");
    const auto words = syslat::schreier_kernel_generators(img);
    std::cout << "image order " << img.order() << ", " << words.size() << " Schreier generators\n";
    std::cout << "first generators:";
    for (std::size_t i = 0; i < 5 && i < words.size(); ++i) std::cout << " " << words[i];
    std::cout << "\n";

    const syslat::LevelContext level(3, 2, 7);
    std::size_t in_kernel = 0;
    for (const auto& w : words) in_kernel += level.kernel_membership(w) ? 1 : 0;
    std::cout << "level 7 at t = 7: diagram " << (level.commutes() ? "commutes" : "fails") << ", " << in_kernel << "/"
              << words.size() << " words reduce to the identity\n";
}
