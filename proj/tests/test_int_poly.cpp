#include <random>

#include "doctest.h"
#include "frobres/errors.hpp"
#include "frobres/int_poly.hpp"
#include "oracles.hpp"

using namespace frobres;

namespace {

IntPoly poly(std::initializer_list<long> ascending) {
    std::vector<mpz_class> v;
    for (long c : ascending) v.emplace_back(c);
    return IntPoly(std::move(v));
}

IntPoly random_poly(std::mt19937& rng, int max_deg, int coeff_bound) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    while (true) {
        int d = deg(rng);
        std::vector<mpz_class> v(d + 1);
        for (auto& c : v) c = coeff(rng);
        IntPoly p(std::move(v));
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("parsing and arithmetic basics") {
    IntPoly f = IntPoly::parse_csv("1, 0, 0, -3, 2, 1");
    CHECK(f.degree() == 5);
    CHECK(f.is_monic());
    CHECK(f.csv() == "1,0,0,-3,2,1");
    CHECK(f.pretty() == "x^5 + 2x^4 - 3x^3 + 1");
    CHECK(f.eval(2) == 32 + 32 - 24 + 1);

    CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
    CHECK((poly({1, 2}) + poly({1, -2})) == poly({2}));
    CHECK(poly({3, 6, 9}).content() == 3);
    CHECK(poly({1, 0, 0, 1}).derivative() == poly({0, 0, 3}));
    CHECK_THROWS_AS(IntPoly::parse_csv("1,,2"), BadInputError);
    CHECK_THROWS_AS(IntPoly::parse_csv("1,x"), BadInputError);
}

TEST_CASE("resultant golden values") {
    // Res(X-2, X+5) = 7: the only bad prime of the quintic's 5-cycle pair
    CHECK(resultant(poly({-2, 1}), poly({5, 1})) == 7);
    // product formula over root pairs gives 7^4
    IntPoly a = poly({-2, 1}) * poly({-2, 1});
    IntPoly b = poly({5, 1}) * poly({5, 1});
    CHECK(resultant(a, b) == 2401);
    // common roots
    CHECK(resultant(poly({1, 2, 3}), poly({1, 2, 3})) == 0);
    CHECK_THROWS_AS(resultant(IntPoly{}, poly({1})), BadInputError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 400; ++iter) {
        IntPoly a = random_poly(rng, 4, 8);
        IntPoly b = random_poly(rng, 4, 8);
        if (a.degree() == 0 && b.degree() == 0) continue;
        CHECK(resultant(a, b) == oracles::sylvester_resultant(a, b));
    }
    // a couple of larger spot checks
    std::mt19937 rng2(777);
    for (int iter = 0; iter < 20; ++iter) {
        IntPoly a = random_poly(rng2, 8, 20);
        IntPoly b = random_poly(rng2, 7, 20);
        if (a.degree() < 1 || b.degree() < 1) continue;
        CHECK(resultant(a, b) == oracles::sylvester_resultant(a, b));
    }
}

TEST_CASE("resultant symmetry and multiplicativity") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly a = random_poly(rng, 3, 6);
        IntPoly b = random_poly(rng, 3, 6);
        IntPoly c = random_poly(rng, 2, 6);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        mpz_class lhs = resultant(a, b);
        mpz_class rhs = resultant(b, a);
        if ((a.degree() * b.degree()) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
        CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }
}

TEST_CASE("discriminants") {
    CHECK(discriminant(poly({-1, -3, 0, 1})) == 81);     // x^3 - 3x - 1
    CHECK(discriminant(poly({1, 0, 0, -3, 2, 1})) == 55225); // the D10 quintic, 235^2
    CHECK(discriminant(poly({-1, -1, 0, 1})) == -23);    // x^3 - x - 1
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> small(-9, 9);
    for (int iter = 0; iter < 100; ++iter) {
        mpz_class b = small(rng), c = small(rng);
        IntPoly f({-c * 0 + c, b, 0, 1}); // x^3 + b x + c
        mpz_class expected = -4 * b * b * b - 27 * c * c;
        if (expected == 0) continue;
        CHECK(discriminant(f) == expected);
    }
}

TEST_CASE("squarefreeness over Q") {
    CHECK(is_squarefree_over_q(poly({-1, 0, 1})));
    CHECK(!is_squarefree_over_q(poly({1, 2, 1})));
    CHECK(is_squarefree_over_q(poly({1, 0, 0, -3, 2, 1})));
}
