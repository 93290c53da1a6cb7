#include "amp/moments.hpp"

#include <array>
#include <cmath>
#include <string>

#include "amp/enumerators.hpp"

namespace amp {

const Rat& MomentVector::m(unsigned r) const {
    if (r >= central.size()) throw DomainError("MomentVector: order " + std::to_string(r) + " not computed");
    return central[r];
}

namespace {

/// Stirling numbers of the second kind S(r, j), r, j <= kMaxMomentOrder.
/// Raw moments are E[X^r] = sum_j S(r, j) f^(j)(1).
const std::vector<std::vector<BigInt>>& stirling2() {
    static const auto table = [] {
        std::vector<std::vector<BigInt>> s(kMaxMomentOrder + 1, std::vector<BigInt>(kMaxMomentOrder + 1, 0));
        s[0][0] = 1;
        for (unsigned r = 1; r <= kMaxMomentOrder; ++r)
            for (unsigned j = 1; j <= r; ++j) s[r][j] = s[r - 1][j - 1] + BigInt(j) * s[r - 1][j];
        return s;
    }();
    return table;
}

}  // namespace

std::vector<Rat> factorial_moments(const UniPoly& f, unsigned max_order) {
    // f(1 + t) = sum_j f^(j)(1) t^j / j!
    const UniPoly shifted = f.compose(UniPoly({Rat(1), Rat(1)}));
    std::vector<Rat> out(max_order + 1);
    for (unsigned j = 0; j <= max_order; ++j) out[j] = shifted.coeff(j) * Rat(factorial(j));
    return out;
}

MomentVector moments_from_pgf(const UniPoly& f, unsigned max_order) {
    if (max_order > kMaxMomentOrder)
        throw DomainError("moments_from_pgf: order above " + std::to_string(kMaxMomentOrder) + " not supported");
    const auto phi = factorial_moments(f, max_order);
    if (phi[0] != Rat(1)) throw DomainError("moments_from_pgf: f(1) = " + phi[0].pretty() + ", not a pgf");

    const auto& s = stirling2();
    std::vector<Rat> raw(max_order + 1);
    for (unsigned r = 0; r <= max_order; ++r)
        for (unsigned j = 0; j <= r; ++j)
            if (s[r][j] != 0) raw[r] += Rat(s[r][j]) * phi[j];

    MomentVector mv;
    mv.mean = max_order >= 1 ? raw[1] : factorial_moments(f, 1)[1];
    mv.central.assign(max_order + 1, Rat());
    const Rat neg_mean = -mv.mean;
    for (unsigned r = 0; r <= max_order; ++r) {
        Rat acc;
        for (unsigned i = 0; i <= r; ++i) acc += Rat(binomial(r, i)) * raw[i] * neg_mean.pow(static_cast<int>(r - i));
        mv.central[r] = acc;
    }
    return mv;
}

Rat expectation_k(unsigned n, unsigned k) {
    if (k < 1 || k >= n)
        throw DomainError("expectation_k: need 1 <= k < n (got n = " + std::to_string(n) + ", k = " +
                          std::to_string(k) + "); use the pgf route for k = n");
    Rat tail(1);
    for (unsigned i = k + 1; i + 1 <= n; ++i) tail += Rat(1, static_cast<long>(i));
    return Rat(static_cast<long>(k)) * tail;
}

namespace {

// Closed forms of the mean and m_2..m_6, one absent-minded passenger.
constexpr std::array<const char*, 6> kMomentClosedForms{
    "Hn[1]",
    "(n*Hn[1]-n*Hn[2]+2*Hn[1])/n",
    "(n*Hn[1]-3*n*Hn[2]+2*n*Hn[3]-3*Hn[1]^2+6*Hn[1]-3*Hn[2])/n",
    "(3*n*Hn[1]^2-6*n*Hn[1]*Hn[2]+3*n*Hn[2]^2+4*Hn[1]^3+n*Hn[1]-7*n*Hn[2]+12*n*Hn[3]"
    "-6*n*Hn[4]-6*Hn[1]^2+14*Hn[1]-18*Hn[2]+8*Hn[3])/n",
    "(-5*Hn[1]^4+10*n*Hn[1]^2-40*n*Hn[1]*Hn[2]+20*n*Hn[1]*Hn[3]"
    "+30*n*Hn[2]^2-20*n*Hn[2]*Hn[3]+10*Hn[1]^3+n*Hn[1]-15*n*Hn[2]+50*n*Hn[3]-60*n*Hn[4]"
    "+24*n*Hn[5]+5*Hn[1]^2-30*Hn[1]*Hn[2]+15*Hn[2]^2+30*Hn[1]-75*Hn[2]+80*Hn[3]-30*Hn[4])/n",
    "(6*Hn[1]^5+15*n*Hn[1]^3-45*n*Hn[1]^2*Hn[2]+45*n*Hn[1]*Hn[2]^2-15*n*Hn[2]^3-15*Hn[1]^4"
    "+25*n*Hn[1]^2-180*n*Hn[1]*Hn[2]+220*n*Hn[1]*Hn[3]-90*n*Hn[1]*Hn[4]+195*n*Hn[2]^2"
    "-300*n*Hn[2]*Hn[3]+90*n*Hn[2]*Hn[4]+40*n*Hn[3]^2+20*Hn[1]^3+n*Hn[1]-31*n*Hn[2]"
    "+180*n*Hn[3]-390*n*Hn[4]+360*n*Hn[5]-120*n*Hn[6]+90*Hn[1]^2-330*Hn[1]*Hn[2]"
    "+120*Hn[1]*Hn[3]+225*Hn[2]^2"
    "-120*Hn[2]*Hn[3]+62*Hn[1]-270*Hn[2]+520*Hn[3]-450*Hn[4]+144*Hn[5])/n",
};

}  // namespace

const HarmonicExpr& moment_closed_form_expr(unsigned r) {
    static const auto parsed = [] {
        std::array<HarmonicExpr, 6> out;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = HarmonicExpr::parse(kMomentClosedForms[i]);
        return out;
    }();
    if (r < 1 || r > parsed.size())
        throw DomainError("moment_closed_form: closed forms exist for r = 1..6 only (got r = " + std::to_string(r) +
                          "); use moments_from_pgf or the discovery engine");
    return parsed[r - 1];
}

Rat moment_closed_form(unsigned n, unsigned r) {
    const auto& expr = moment_closed_form_expr(r);
    if (n < 2) throw DomainError("moment_closed_form: need n >= 2");
    return expr.evaluate(n);
}

std::vector<double> standardized_moments_float(unsigned long n, unsigned max_order) {
    if (n < 2) throw DomainError("standardized_moments_float: need n >= 2");
    if (max_order > 6) throw DomainError("standardized_moments_float: closed forms cover r <= 6");
    std::vector<double> out;
    if (max_order < 3) return out;
    if (n <= kExactStandardizedMaxN) {
        const auto mv = moments_from_pgf(pgf(static_cast<unsigned>(n), 1), max_order);
        const double m2 = mv.m(2).to_double();
        for (unsigned r = 3; r <= max_order; ++r) {
            // m_r / m_2^(r/2): rational for even r, one square root for odd r.
            const Rat ratio = mv.m(r) / mv.m(2).pow(static_cast<int>(r / 2));
            out.push_back(ratio.to_double() / (r % 2 ? std::sqrt(m2) : 1.0));
        }
        return out;
    }
    std::vector<double> h(max_order + 1, 0.0);
    for (unsigned j = 1; j <= max_order; ++j) h[j] = harmonic_float(n, j);
    const double nd = static_cast<double>(n);
    const double m2 = moment_closed_form_expr(2).evaluate_float(nd, h);
    for (unsigned r = 3; r <= max_order; ++r) out.push_back(moment_closed_form_expr(r).evaluate_float(nd, h) / std::pow(m2, r / 2.0));
    return out;
}

}  // namespace amp
