#include "amp/linsolve.hpp"

#include <utility>

namespace amp {

namespace {

using IntRow = std::vector<BigInt>;

IntRow integer_row(const std::vector<Rat>& coeffs, const Rat& rhs) {
    BigInt l = 1, g = 0;
    for (const auto& c : coeffs) l = lcm(l, c.den());
    l = lcm(l, rhs.den());
    IntRow row;
    row.reserve(coeffs.size() + 1);
    for (const auto& c : coeffs) row.push_back(c.num() * (l / c.den()));
    row.push_back(rhs.num() * (l / rhs.den()));
    for (const auto& v : row) g = gcd(g, v);
    if (g > 1)
        for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return row;
}

struct Echelon {
    std::vector<IntRow> rows;
    std::vector<std::size_t> pivots;
    bool consistent = true;
};

// Fraction-free forward elimination over the first `cols` columns; the
// column at index `cols` is carried along as the right-hand side.
Echelon eliminate(std::vector<IntRow> m, std::size_t cols) {
    Echelon e;
    BigInt prev = 1;
    std::size_t r = 0;
    BigInt t;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const BigInt& piv = m[r][c];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const BigInt lead = m[i][c];
            for (std::size_t j = c + 1; j <= cols; ++j) {
                // m[i][j] = (piv * m[i][j] - lead * m[r][j]) / prev, exact.
                t = piv * m[i][j];
                if (lead != 0) t -= lead * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][cols] != 0) e.consistent = false;
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

// Pivot variables from the echelon rows, given values of the free ones.
void back_substitute(const Echelon& e, std::size_t cols, bool homogeneous, std::vector<Rat>& x) {
    for (std::size_t t = e.rows.size(); t-- > 0;) {
        const auto& row = e.rows[t];
        const std::size_t c = e.pivots[t];
        Rat acc = homogeneous ? Rat() : Rat(row[cols]);
        for (std::size_t j = c + 1; j < cols; ++j)
            if (row[j] != 0 && !x[j].is_zero()) acc -= Rat(row[j]) * x[j];
        x[c] = acc / Rat(row[c]);
    }
}

std::vector<std::vector<Rat>> kernel_from(const Echelon& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols);
        x[f] = Rat(1);
        back_substitute(e, cols, true, x);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace

ExactSolution solve_exact(const RatMatrix& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw DomainError("solve_exact: row count mismatch");
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    std::vector<IntRow> m;
    m.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != cols) throw DomainError("solve_exact: ragged matrix");
        m.push_back(integer_row(a[i], b[i]));
    }
    const auto e = eliminate(std::move(m), cols);

    ExactSolution out;
    out.consistent = e.consistent;
    out.rank = e.pivots.size();
    out.pivots = e.pivots;
    out.kernel = kernel_from(e, cols);
    if (e.consistent) {
        out.particular.assign(cols, Rat());
        back_substitute(e, cols, false, out.particular);
    }
    return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a) {
    return solve_exact(a, std::vector<Rat>(a.size())).kernel;
}

}  // namespace amp
