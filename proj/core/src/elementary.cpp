#include "amp/elementary.hpp"

#include <string>

namespace amp {

std::vector<Rat> elementary_variants(std::span<const Rat> w) {
    std::vector<Rat> e{Rat(1)};
    for (const Rat& wj : w) {
        std::vector<Rat> next(e.size() + 1);
        const Rat one_minus = Rat(1) - wj;
        for (std::size_t r = 0; r < e.size(); ++r) {
            next[r] += wj * e[r];
            next[r + 1] += one_minus * e[r];
        }
        e = std::move(next);
    }
    return e;
}

Rat elementary_variant(unsigned r, std::span<const Rat> w) {
    if (r > w.size())
        throw DomainError("elementary_variant: r = " + std::to_string(r) + " exceeds k = " + std::to_string(w.size()));
    return elementary_variants(w)[r];
}

std::vector<MultilinearPoly> elementary_variants_symbolic(unsigned k, unsigned n) {
    if (k > n) throw DomainError("elementary_variants_symbolic: k exceeds the number of variables");
    std::vector<MultilinearPoly> e{MultilinearPoly::constant(n, Rat(1))};
    for (unsigned j = 1; j <= k; ++j) {
        std::vector<MultilinearPoly> next(e.size() + 1, MultilinearPoly(n));
        for (std::size_t r = 0; r < e.size(); ++r) {
            next[r] += e[r].times_affine(j, Rat(1), Rat(0));
            next[r + 1] += e[r].times_affine(j, Rat(-1), Rat(1));
        }
        e = std::move(next);
    }
    return e;
}

MultilinearPoly elementary_variant_symbolic(unsigned r, unsigned k, unsigned n) {
    if (r > k)
        throw DomainError("elementary_variant: r = " + std::to_string(r) + " exceeds k = " + std::to_string(k));
    return elementary_variants_symbolic(k, n)[r];
}

}  // namespace amp
