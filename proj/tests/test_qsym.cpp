// Monomial/fundamental quasi-symmetric polynomials and their recurrences.
#include "doctest.h"

#include "qsymcat/composition.hpp"
#include "qsymcat/polynomial.hpp"
#include "qsymcat/qsym.hpp"

#include <map>
#include <vector>

using namespace qsymcat;

namespace {

Composition co(std::vector<int> v) { return Composition(std::move(v)); }

}  // namespace

TEST_CASE("monomial basis elements by direct summation") {
    CHECK(monomial_qsym(co({2, 1}), 3) ==
          Polynomial::parse("x1^2*x2 + x1^2*x3 + x2^2*x3", 3));
    CHECK(monomial_qsym(co({1}), 2) == Polynomial::parse("x1 + x2", 2));
    CHECK(monomial_qsym(co({1, 2}), 1).is_zero());
    CHECK(monomial_qsym(co({}), 3) == Polynomial::parse("1", 3));
    CHECK(monomial_qsym(co({2}), 0).is_zero());
}

TEST_CASE("fundamental basis elements") {
    CHECK(fundamental_qsym(co({2}), 2) == Polynomial::parse("x1^2 + x1*x2 + x2^2", 2));
    // [1,1] admits no further refinement
    CHECK(fundamental_qsym(co({1, 1}), 3) ==
          Polynomial::parse("x1*x2 + x1*x3 + x2*x3", 3));
    CHECK(fundamental_qsym(co({1, 1}), 3) == monomial_qsym(co({1, 1}), 3));
    CHECK(fundamental_qsym(co({3}), 1) == Polynomial::parse("x1^3", 1));
    CHECK(fundamental_qsym(co({}), 2) == Polynomial::parse("1", 2));
}

TEST_CASE("the refinement sum equals the chain construction everywhere") {
    for (int d = 0; d <= 6; ++d)
        for (const Composition& alpha : compositions_of(d))
            for (int n = 0; n <= 7; ++n)
                CHECK(fundamental_qsym(alpha, n) == fundamental_qsym_by_chains(alpha, n));
}

TEST_CASE("fundamental equals the sum of monomial basis elements over refinements") {
    for (int d = 0; d <= 5; ++d)
        for (const Composition& alpha : compositions_of(d)) {
            Polynomial sum(4);
            for (const Composition& beta : refinements(alpha))
                sum += monomial_qsym(beta, 4);
            CHECK(fundamental_qsym(alpha, 4) == sum);
        }
}

TEST_CASE("qsym polynomials are homogeneous with the composition degree") {
    for (int d = 1; d <= 5; ++d)
        for (const Composition& alpha : compositions_of(d)) {
            Polynomial f = fundamental_qsym(alpha, 4);
            Polynomial m = monomial_qsym(alpha, 4);
            if (!f.is_zero()) {
                CHECK(f.is_homogeneous());
                CHECK(f.max_degree() == d);
            }
            if (!m.is_zero()) {
                CHECK(m.is_homogeneous());
                CHECK(m.max_degree() == d);
            }
        }
}

TEST_CASE("leading monomial of F stacks the parts on the first variables") {
    for (int d = 1; d <= 5; ++d)
        for (const Composition& alpha : compositions_of(d)) {
            if (alpha.length() > 4) continue;
            Polynomial f = fundamental_qsym(alpha, 4);
            CHECK(f.leading_monomial() ==
                  Monomial::from_composition(GenComposition(alpha), 4));
            CHECK(f.leading_coeff() == 1);
        }
}

TEST_CASE("window truncation commutes with construction") {
    for (int d = 0; d <= 5; ++d)
        for (const Composition& alpha : compositions_of(d))
            for (int n = 1; n <= 5; ++n) {
                CHECK(fundamental_qsym(alpha, n).restricted(n - 1) ==
                      fundamental_qsym(alpha, n - 1));
                CHECK(monomial_qsym(alpha, n).restricted(n - 1) ==
                      monomial_qsym(alpha, n - 1));
            }
}

TEST_CASE("first-part recurrence of F") {
    CHECK(check_f_recurrence(co({2, 1}), 4));
    CHECK(check_f_recurrence(co({1, 1}), 3));
    CHECK(check_f_recurrence(co({1}), 1));
    CHECK_THROWS_AS(check_f_recurrence(co({}), 2), precondition_error);

    for (int d = 1; d <= 5; ++d)
        for (const Composition& alpha : compositions_of(d))
            for (int n = 1; n <= 5; ++n) CHECK(check_f_recurrence(alpha, n));
}

TEST_CASE("expansion of F in the monomial basis") {
    auto row21 = expand_in_M(co({2, 1}));
    REQUIRE(row21.size() == 2);
    CHECK(row21[0] == std::pair{co({2, 1}), 1});
    CHECK(row21[1] == std::pair{co({1, 1, 1}), 1});

    auto row1 = expand_in_M(co({1}));
    REQUIRE(row1.size() == 1);
    CHECK(row1[0] == std::pair{co({1}), 1});

    auto row3 = expand_in_M(co({3}));
    REQUIRE(row3.size() == 4);
    CHECK(row3[0] == std::pair{co({3}), 1});
    CHECK(row3[1] == std::pair{co({2, 1}), 1});
    CHECK(row3[2] == std::pair{co({1, 2}), 1});
    CHECK(row3[3] == std::pair{co({1, 1, 1}), 1});

    // the rows really are the change of basis
    for (int d = 1; d <= 5; ++d)
        for (const Composition& alpha : compositions_of(d)) {
            Polynomial sum(3);
            for (const auto& [beta, c] : expand_in_M(alpha))
                sum += monomial_qsym(beta, 3) * Rat(c);
            CHECK(sum == fundamental_qsym(alpha, 3));
        }
}
