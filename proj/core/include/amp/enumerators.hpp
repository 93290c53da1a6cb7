#pragma once

#include <utility>
#include <vector>

#include "amp/multilinear.hpp"
#include "amp/rat.hpp"
#include "amp/unipoly.hpp"

namespace amp {

/// Weight enumerators A_2..A_n of the states reached after passenger 1 takes
/// seat i (one absent-minded passenger). a[i] holds A_i for i = 1..n; a[0] is unused.
struct ChainState {
    unsigned n = 0;
    std::vector<MultilinearPoly> a;
};

/// Runs the backward step A_{i-1} = w_{i-1} (A_i + (n-i+1) A_i / w_i) / (n-i+2)
/// from A_n = w_n. Requires n >= 2.
ChainState solve_chain(unsigned n);

/// F_n = 1/n - w_1/n + A_1 assembled from the chain. Requires n >= 2.
MultilinearPoly chain_enumerator_k1(unsigned n);

/// (1 - w_1)/n + (w_1/n!) prod_{i=2}^{n} (w_i + n + 1 - i), expanded.
MultilinearPoly closed_form_F1(unsigned n);

/// Weight enumerator with the first k passengers absent-minded:
/// (1/n!) sum_r r! e_{k-r}(w_1..w_k) prod_{j=k+1}^{n} (r w_j + n + 1 - j).
/// Requires 1 <= k <= n <= 62.
MultilinearPoly closed_form_Fk(unsigned n, unsigned k);

/// (1/n!) sum_r r! C(k,r) w^r (1-w)^{k-r} prod_{i=1}^{n-k} (r w + i). Requires 1 <= k <= n.
UniPoly pgf(unsigned n, unsigned k);

/// (1 - w)/n + (w/n!) prod_{i=1}^{n-1} (w + i). Requires n >= 1.
UniPoly pgf_k1_explicit(unsigned n);

/// (n - i + 1)/(n - i + k + 1) for a non-absent-minded passenger k < i <= n.
Rat marginal_correct_prob(unsigned n, unsigned k, unsigned i);

struct SubsetProbabilities {
    Rat all_wrong;
    Rat all_right;
};

/// One absent-minded passenger; s must be a nonempty subset of {2..n}.
SubsetProbabilities subset_probabilities(unsigned n, Subset s);

/// Every variable outside `keep` set to 1.
MultilinearPoly specialize_marginal(const MultilinearPoly& f, Subset keep);

/// Probability that all of `correct` sit in their own seats: the constant term
/// of the marginal over `correct`.
Rat correct_probability(const MultilinearPoly& f, Subset correct);

}  // namespace amp
