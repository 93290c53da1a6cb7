#include "amp/enumerators.hpp"

#include <string>

#include "amp/elementary.hpp"

namespace amp {

namespace {

void require_pair(unsigned n, unsigned k) {
    if (n < 1) throw DomainError("need n >= 1");
    if (k > n)
        throw DomainError("the closed forms require n >= k (got n = " + std::to_string(n) + ", k = " +
                          std::to_string(k) + ")");
}

Rat inverse_factorial(unsigned n) { return Rat(BigInt(1), factorial(n)); }

}  // namespace

ChainState solve_chain(unsigned n) {
    if (n < 2) throw DomainError("the state chain needs n >= 2");
    ChainState st{n, std::vector<MultilinearPoly>(n + 1, MultilinearPoly(n))};
    st.a[n] = MultilinearPoly::variable(n, n);
    for (unsigned i = n; i >= 2; --i) {
        auto bracket = st.a[i].divide_by_variable(i);
        bracket *= Rat(static_cast<long>(n - i + 1));
        bracket += st.a[i];
        st.a[i - 1] = bracket.times_affine(i - 1, Rat(1, static_cast<long>(n - i + 2)), Rat(0));
    }
    return st;
}

MultilinearPoly chain_enumerator_k1(unsigned n) {
    auto st = solve_chain(n);
    auto f = MultilinearPoly::constant(n, Rat(1, n)) - MultilinearPoly::variable(n, 1) * Rat(1, n);
    return f + st.a[1];
}

MultilinearPoly closed_form_F1(unsigned n) {
    require_pair(n, 1);
    if (n > kMaxMultilinearVars) throw DomainError("closed_form_F1: n exceeds 62");
    // (w_1 / n!) prod_{i=2}^{n} (w_i + n + 1 - i)
    auto prod = MultilinearPoly::constant(n, inverse_factorial(n));
    for (unsigned i = 2; i <= n; ++i) prod = prod.times_affine(i, Rat(1), Rat(static_cast<long>(n + 1 - i)));
    auto f = prod.times_affine(1, Rat(1), Rat(0));
    return f + MultilinearPoly::constant(n, Rat(1, n)).times_affine(1, Rat(-1), Rat(1));
}

MultilinearPoly closed_form_Fk(unsigned n, unsigned k) {
    require_pair(n, k);
    if (n > kMaxMultilinearVars) throw DomainError("closed_form_Fk: n exceeds 62");
    const auto e = elementary_variants_symbolic(k, n);
    MultilinearPoly total(n);
    for (unsigned r = 0; r <= k; ++r) {
        auto term = e[k - r] * Rat(factorial(r));
        for (unsigned j = k + 1; j <= n; ++j)
            term = term.times_affine(j, Rat(static_cast<long>(r)), Rat(static_cast<long>(n + 1 - j)));
        total += term;
    }
    return total * inverse_factorial(n);
}

UniPoly pgf(unsigned n, unsigned k) {
    require_pair(n, k);
    const UniPoly w = UniPoly::monomial(Rat(1), 1);
    const UniPoly one_minus_w({Rat(1), Rat(-1)});
    UniPoly total;
    for (unsigned r = 0; r <= k; ++r) {
        UniPoly term = UniPoly::constant(Rat(factorial(r) * binomial(k, r)));
        for (unsigned i = 0; i < r; ++i) term = term * w;
        for (unsigned i = r; i < k; ++i) term = term * one_minus_w;
        total += term * rising_product(r, n - k);
    }
    return total * inverse_factorial(n);
}

UniPoly pgf_k1_explicit(unsigned n) {
    if (n < 1) throw DomainError("pgf_k1_explicit: need n >= 1");
    const UniPoly head = UniPoly({Rat(1), Rat(-1)}) * Rat(1, n);
    const UniPoly tail = UniPoly::monomial(inverse_factorial(n), 1) * rising_product(1, n - 1);
    return head + tail;
}

Rat marginal_correct_prob(unsigned n, unsigned k, unsigned i) {
    if (i <= k || i > n)
        throw DomainError("marginal_correct_prob: need k < i <= n (got n = " + std::to_string(n) + ", k = " +
                          std::to_string(k) + ", i = " + std::to_string(i) + ")");
    return Rat(static_cast<long>(n - i + 1), static_cast<long>(n - i + k + 1));
}

SubsetProbabilities subset_probabilities(unsigned n, Subset s) {
    if (n < 2 || n > kMaxMultilinearVars) throw DomainError("subset_probabilities: need 2 <= n <= 62");
    if (s == 0) throw DomainError("subset_probabilities: S must be nonempty");
    if (contains(s, 1)) throw DomainError("subset_probabilities: passenger 1 cannot be in S");
    if (s & ~full_subset(n)) throw DomainError("subset_probabilities: S must be a subset of {2..n}");
    SubsetProbabilities out{Rat(1), Rat(1)};
    for (unsigned i : elements(s)) {
        const Rat denom(static_cast<long>(n + 2 - i));
        out.all_wrong *= Rat(1) / denom;
        out.all_right *= Rat(static_cast<long>(n + 1 - i)) / denom;
    }
    return out;
}

MultilinearPoly specialize_marginal(const MultilinearPoly& f, Subset keep) {
    if (keep & ~full_subset(f.n())) throw DomainError("specialize_marginal: keep set outside w1..wn");
    return f.specialize_to_one_outside(keep);
}

Rat correct_probability(const MultilinearPoly& f, Subset correct) {
    return specialize_marginal(f, correct).coeff(0);
}

}  // namespace amp
