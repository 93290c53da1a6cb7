#pragma once

#include <span>
#include <vector>

#include "amp/multilinear.hpp"
#include "amp/rat.hpp"

namespace amp {

// Coefficients e_0..e_k of X^r in prod_{j=1}^{k} ((1 - w_j) X + w_j).
// e_r picks which r of the k factors contribute their (1 - w_j) X part.

/// All e_r at a numeric point; the result has w.size() + 1 entries.
std::vector<Rat> elementary_variants(std::span<const Rat> w);

/// e_r at a numeric point; r > w.size() is a DomainError.
Rat elementary_variant(unsigned r, std::span<const Rat> w);

/// e_r(w_1..w_k) as a multilinear polynomial inside the ring in w_1..w_n (k <= n).
MultilinearPoly elementary_variant_symbolic(unsigned r, unsigned k, unsigned n);

/// All symbolic e_0..e_k in the ring in w_1..w_n.
std::vector<MultilinearPoly> elementary_variants_symbolic(unsigned k, unsigned n);

}  // namespace amp
