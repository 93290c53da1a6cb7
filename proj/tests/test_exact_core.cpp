#include <doctest.h>

#include <random>

#include "amp/bivar.hpp"
#include "amp/elementary.hpp"
#include "amp/linsolve.hpp"
#include "amp/multilinear.hpp"
#include "amp/multipoly.hpp"
#include "amp/rat.hpp"
#include "amp/unipoly.hpp"

using namespace amp;

namespace {

Rat random_rat(std::mt19937_64& gen) {
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    return Rat(num(gen), den(gen));
}

UniPoly random_poly(std::mt19937_64& gen, int max_deg) {
    std::vector<Rat> c(std::uniform_int_distribution<int>(0, max_deg)(gen) + 1);
    for (auto& x : c) x = random_rat(gen);
    return UniPoly(c);
}

}  // namespace

TEST_CASE("rat parses, normalizes and prints p/q") {
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK(Rat::parse("-5") == Rat(-5));
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(4).str() == "4/1");
    CHECK(Rat().str() == "0/1");
    CHECK(Rat(4).pretty() == "4");
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
    CHECK_THROWS_AS(Rat::parse("1/x"), DomainError);
}

TEST_CASE("rat arithmetic is exact beyond machine range") {
    Rat x = Rat(factorial(40)) / Rat(factorial(38));
    CHECK(x == Rat(40 * 39));
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
}

TEST_CASE("rat property: (a + b) - b == a and (a * b) / b == a") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 500; ++i) {
        const Rat a = random_rat(gen), b = random_rat(gen);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("unipoly evaluation is a ring homomorphism") {
    std::mt19937_64 gen(12);
    for (int i = 0; i < 100; ++i) {
        const auto p = random_poly(gen, 6), q = random_poly(gen, 6);
        const Rat w = random_rat(gen);
        CHECK((p * q).evaluate(w) == p.evaluate(w) * q.evaluate(w));
        CHECK((p + q).evaluate(w) == p.evaluate(w) + q.evaluate(w));
        CHECK(p.compose(q).evaluate(w) == p.evaluate(q.evaluate(w)));
    }
}

TEST_CASE("unipoly division and gcd") {
    const UniPoly a{Rat(-1), Rat(0), Rat(1)};  // w^2 - 1
    const UniPoly b{Rat(1), Rat(1)};           // w + 1
    const auto [q, r] = UniPoly::divmod(a, b);
    CHECK(q == UniPoly{Rat(-1), Rat(1)});
    CHECK(r.is_zero());
    CHECK(UniPoly::gcd(a * UniPoly{Rat(2), Rat(1)}, b * UniPoly{Rat(2), Rat(1)}) == UniPoly{Rat(2), Rat(3), Rat(1)});
    CHECK(UniPoly{Rat(1), Rat(2), Rat(3)}.derivative() == UniPoly{Rat(2), Rat(6)});
    CHECK(rising_product(3, 2).evaluate(Rat(1)) == Rat(4 * 5));
}

TEST_CASE("multipoly arithmetic, shift and parsing") {
    const auto n = bivar_n(), w = bivar_w();
    const auto p = (n + w) * (n - w);
    CHECK(p == n * n - w * w);
    CHECK(p.total_degree() == 2);
    const auto shifted = p.shift(kVarN, Rat(-1));
    const Rat pt[] = {Rat(5), Rat(2)};
    const Rat pt0[] = {Rat(4), Rat(2)};
    CHECK(shifted.evaluate(pt) == p.evaluate(pt0));

    const auto f = BivarRatFun::parse("n*(n+w)/((2+n)*(1+n))");
    CHECK(f.evaluate(Rat(2), Rat(1)) == Rat(6, 12));
    CHECK(f.shift_n(Rat(1)).evaluate(Rat(1), Rat(1)) == f.evaluate(Rat(2), Rat(1)));
    CHECK(BivarRatFun::parse("(n^2-1)/(n-1)") == BivarRatFun::parse("n+1"));
    CHECK(BivarRatFun::parse("(n^2-1)/(n-1)").to_string() == "n+1");
    CHECK_THROWS_AS(BivarRatFun::parse("n/(w-w)"), DomainError);
    CHECK_THROWS_AS(BivarRatFun::parse("n+x"), DomainError);
    CHECK_THROWS_AS(BivarRatFun::parse("(n+1"), DomainError);
}

TEST_CASE("multilinear polynomials") {
    const auto w1 = MultilinearPoly::variable(3, 1), w3 = MultilinearPoly::variable(3, 3);
    const auto p = (w1 + MultilinearPoly::constant(3, Rat(2))) * w3;
    CHECK(p.coeff(make_subset({1, 3})) == Rat(1));
    CHECK(p.coeff(make_subset({3})) == Rat(2));
    CHECK(p.diagonal() == UniPoly{Rat(0), Rat(2), Rat(1)});
    CHECK(p.specialize_to_one_outside(make_subset({1})).coeff(make_subset({1})) == Rat(1));
    CHECK(p.to_string() == "2*w3 + w1*w3");
    CHECK(subset_to_string(make_subset({1, 2})) == "{1,2}");

    CHECK_THROWS_AS(w1 * w1, DomainError);
    CHECK_THROWS_AS(p.times_affine(3, Rat(1), Rat(0)), DomainError);
    CHECK_THROWS_AS(MultilinearPoly::variable(3, 4), DomainError);
    CHECK_THROWS_AS(MultilinearPoly(63), DomainError);
}

TEST_CASE("elementary variants: definition at random points and sum to 1 at w = 1") {
    std::mt19937_64 gen(13);
    for (unsigned k = 1; k <= 5; ++k) {
        std::vector<Rat> w(k);
        for (auto& x : w) x = random_rat(gen);
        const auto e = elementary_variants(w);
        // prod_j ((1 - w_j) X + w_j) at X = 2
        Rat lhs(1);
        for (const auto& x : w) lhs *= (Rat(1) - x) * Rat(2) + x;
        Rat rhs;
        for (unsigned r = 0; r <= k; ++r) rhs += e[r] * Rat(2).pow(static_cast<int>(r));
        CHECK(lhs == rhs);
        Rat total;
        for (const auto& x : e) total += x;
        Rat prod_w(1);
        for (const auto& x : w) prod_w *= x;
        CHECK(total == Rat(1));
        CHECK(e[0] == prod_w);

        const auto sym = elementary_variants_symbolic(k, k + 1);
        std::vector<Rat> point(k + 1, Rat(7));
        for (unsigned j = 0; j < k; ++j) point[j] = w[j];
        for (unsigned r = 0; r <= k; ++r) CHECK(sym[r].evaluate(point) == e[r]);
    }
    const Rat one[] = {Rat(1)};
    CHECK_THROWS_AS(elementary_variant(2, one), DomainError);
}

TEST_CASE("exact linear solver") {
    const RatMatrix a{{Rat(2), Rat(1), Rat(-1)}, {Rat(-3), Rat(-1), Rat(2)}, {Rat(-2), Rat(1), Rat(2)}};
    const auto s = solve_exact(a, {Rat(8), Rat(-11), Rat(-3)});
    REQUIRE(s.unique());
    CHECK(s.particular == std::vector<Rat>{Rat(2), Rat(3), Rat(-1)});

    const RatMatrix sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_FALSE(solve_exact(sing, {Rat(1), Rat(3)}).consistent);
    const auto under = solve_exact(sing, {Rat(1), Rat(2)});
    CHECK(under.consistent);
    CHECK(under.rank == 1);
    REQUIRE(under.kernel.size() == 1);
    CHECK(under.kernel[0] == std::vector<Rat>{Rat(-2), Rat(1)});
    CHECK(kernel_basis(a).empty());
}
