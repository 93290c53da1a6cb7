#include "amp/ansatz.hpp"

#include <algorithm>
#include <numeric>

#include "amp/enumerators.hpp"
#include "amp/linsolve.hpp"
#include "amp/moments.hpp"

namespace amp {

namespace {

void enumerate_monomials(const AnsatzSpec& spec, Exponents& cur, std::size_t slot, unsigned degree, unsigned weight,
                         std::vector<Exponents>& out) {
    if (slot == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0;; ++e) {
        const unsigned d = degree + e;
        const unsigned wgt = weight + (slot == 0 ? 0 : static_cast<unsigned>(slot) * e);
        if (d > spec.max_total_degree) break;
        if (slot == 0 && spec.max_n_degree && e > *spec.max_n_degree) break;
        if (slot > 0 && spec.max_weight && wgt > *spec.max_weight) break;
        cur[slot] = e;
        enumerate_monomials(spec, cur, slot + 1, d, wgt, out);
    }
    cur[slot] = 0;
}

}  // namespace

std::vector<Exponents> ansatz_basis(const AnsatzSpec& spec) {
    Exponents cur(spec.max_order + 1, 0);
    std::vector<Exponents> out;
    enumerate_monomials(spec, cur, 0, 0, 0, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

AnsatzSpec default_moment_ansatz(unsigned r) {
    if (r == 0) throw DomainError("default_moment_ansatz: r must be >= 1");
    AnsatzSpec spec;
    spec.max_order = r;
    spec.max_total_degree = r;
    spec.denom_pow = r >= 2 ? 1 : 0;
    spec.max_n_degree = 1;
    spec.max_weight = r;
    return spec;
}

AnsatzResult fit_harmonic_ansatz(std::span<const std::pair<unsigned, Rat>> data, const AnsatzSpec& spec) {
    const auto basis = ansatz_basis(spec);
    if (data.size() < basis.size() + kAnsatzHoldout)
        throw DomainError("fit_harmonic_ansatz: " + std::to_string(data.size()) + " data points; need at least " +
                          std::to_string(basis.size() + kAnsatzHoldout) + " (basis size + 5)");
    const std::size_t solve_count = data.size() - kAnsatzHoldout;
    const std::size_t nvars = spec.max_order + 1;

    auto point_of = [&](unsigned n) {
        std::vector<Rat> pt(nvars);
        pt[0] = Rat(static_cast<long>(n));
        const auto h = harmonic_row(n, spec.max_order);
        for (std::size_t j = 1; j < nvars; ++j) pt[j] = h[j];
        return pt;
    };
    auto row_of = [&](const std::vector<Rat>& pt) {
        std::vector<Rat> row(basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Rat v(1);
            for (std::size_t s = 0; s < nvars; ++s)
                if (basis[c][s]) v *= pt[s].pow(static_cast<int>(basis[c][s]));
            row[c] = v;
        }
        return row;
    };

    RatMatrix a;
    std::vector<Rat> b;
    for (std::size_t i = 0; i < solve_count; ++i) {
        const auto& [n, y] = data[i];
        a.push_back(row_of(point_of(n)));
        b.push_back(y * Rat(static_cast<long>(n)).pow(static_cast<int>(spec.denom_pow)));
    }
    const auto sol = solve_exact(a, b);
    if (!sol.consistent)
        return NoFit{"interpolation system is inconsistent", basis.size(), solve_count};

    MultiPoly num(nvars);
    for (std::size_t c = 0; c < basis.size(); ++c) num.add_term(basis[c], sol.particular[c]);
    HarmonicExpr expr(spec.max_order, num, spec.denom_pow);

    for (std::size_t i = solve_count; i < data.size(); ++i) {
        const auto& [n, y] = data[i];
        if (expr.evaluate(n) != y)
            return NoFit{"fit fails held-out point n = " + std::to_string(n), basis.size(), solve_count};
    }
    return AnsatzFit{expr, sol.kernel.empty(), basis.size(), solve_count, kAnsatzHoldout};
}

std::vector<std::pair<unsigned, Rat>> moment_data(unsigned r, unsigned n_from, unsigned n_to) {
    if (r < 1) throw DomainError("moment_data: r must be >= 1");
    std::vector<std::pair<unsigned, Rat>> out;
    for (unsigned n = std::max(1U, n_from); n <= n_to; ++n) {
        const auto mv = moments_from_pgf(pgf(n, 1), std::max(2U, r));
        out.emplace_back(n, r == 1 ? mv.mean : mv.m(r));
    }
    return out;
}

}  // namespace amp
