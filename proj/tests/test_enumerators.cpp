#include <doctest.h>

#include "amp/boarding.hpp"
#include "amp/enumerators.hpp"

using namespace amp;

TEST_CASE("chain enumerator matches the oracle at n = 3") {
    const auto f = chain_enumerator_k1(3);
    CHECK(f.to_string() == "1/3 + 1/6*w1*w2 + 1/3*w1*w3 + 1/6*w1*w2*w3");
    CHECK(f.coeff(make_subset({1, 3})) == Rat(1, 3));
    CHECK(f.coeff(make_subset({3})) == Rat(0));
    CHECK(chain_enumerator_k1(2).to_string() == "1/2 + 1/2*w1*w2");
}

TEST_CASE("closed forms agree with the chain and the oracle") {
    for (unsigned n = 2; n <= 12; ++n) CHECK(chain_enumerator_k1(n) == closed_form_F1(n));
    CHECK(closed_form_Fk(4, 2) == oracle_weight_enumerator(ProcessConfig::make(4, 2)));
    CHECK(closed_form_Fk(4, 2).to_string() ==
          "1/12 + 1/12*w1*w2 + 1/24*w1*w3 + 1/24*w2*w3 + 1/12*w1*w2*w3 + 1/12*w1*w4 + 1/12*w2*w4 + "
          "1/6*w1*w2*w4 + 1/24*w1*w3*w4 + 1/24*w2*w3*w4 + 1/4*w1*w2*w3*w4");
    CHECK(closed_form_Fk(4, 4).coeff(full_subset(4)) == Rat(3, 8));
    CHECK(closed_form_Fk(3, 0) == MultilinearPoly::constant(3, Rat(1)));
    CHECK_THROWS_AS(closed_form_Fk(2, 3), DomainError);
    CHECK_THROWS_AS(solve_chain(1), DomainError);
}

TEST_CASE("pgf values") {
    CHECK(pgf(3, 1) == UniPoly{Rat(1, 3), Rat(0), Rat(1, 2), Rat(1, 6)});
    CHECK(pgf(1, 1) == UniPoly{Rat(1)});
    CHECK(pgf(5, 2) == UniPoly{Rat(1, 20), Rat(0), Rat(7, 30), Rat(17, 60), Rat(19, 60), Rat(7, 60)});
    CHECK(pgf(10, 1).coeff(2) == Rat(7129, 25200));
    for (unsigned n = 1; n <= 20; ++n) CHECK(pgf(n, 1) == pgf_k1_explicit(n));
    CHECK(pgf(6, 3) == closed_form_Fk(6, 3).diagonal());
}

TEST_CASE("marginal and joint correct-seat probabilities") {
    CHECK(marginal_correct_prob(10, 1, 10) == Rat(1, 2));
    CHECK(marginal_correct_prob(10, 3, 5) == Rat(2, 3));
    CHECK_THROWS_AS(marginal_correct_prob(10, 3, 3), DomainError);
    CHECK_THROWS_AS(marginal_correct_prob(10, 3, 11), DomainError);

    const auto sp = subset_probabilities(6, make_subset({3, 5}));
    CHECK(sp.all_right == Rat(8, 15));
    CHECK(sp.all_wrong == Rat(1, 15));
    CHECK_THROWS_AS(subset_probabilities(6, make_subset({1})), DomainError);

    const auto f = closed_form_Fk(6, 2);
    CHECK(correct_probability(f, make_subset({4})) == marginal_correct_prob(6, 2, 4));
    CHECK(correct_probability(f, make_subset({3, 6})) ==
          marginal_correct_prob(6, 2, 3) * marginal_correct_prob(6, 2, 6));
}
