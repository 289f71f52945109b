// Golden tests for the degree-5 dihedral family f_{a,b} and cross-route
// consistency checks that the acceptance suite exercises at scale.
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "frobres/frob.hpp"

using namespace frobres;

namespace {

IntPoly poly(std::vector<mpz_class> ascending) { return IntPoly(std::move(ascending)); }

// x^5 + (a-3)x^4 + (b-a+3)x^3 + (a^2-a-1-2b)x^2 + bx + a
IntPoly brumer(long a, long b) {
    return poly({a, b, mpz_class(a) * a - a - 1 - 2 * b, b - a + 3, a - 3, 1});
}

} // namespace

TEST_CASE("dihedral quintic family: full table for (a, b) = (2, 3)") {
    const long a = 2, b = 3;
    IntPoly f = brumer(a, b);
    // labelling with integral resolvents, found once from the complex roots
    std::vector<std::pair<std::string, std::string>> pts = {
        {"-0.3673535156311088233624062467783360065270", "0.0"},
        {"0.9150165236978580973347860336912288967154", "0.7280784827139145130128865859532180603969"},
        {"-0.2313397658823036856535829103020608934519", "1.981955940895474026424418977696396367592"},
        {"-0.2313397658823036856535829103020608934519", "-1.981955940895474026424418977696396367592"},
        {"0.9150165236978580973347860336912288967154", "-0.7280784827139145130128865859532180603969"}};
    PermGroup g = closure(5, parse_generators("(1,2,3,4,5);(2,5)(3,4)", 5));
    auto classes = conjugacy_classes(g);
    RootSystem rs = user_order(certified_roots(f), pts);
    GammaTable t = build_gamma(f, g, classes, IntPoly::monomial(1, 1), rs);
    validate(t);

    // 5-cycle resolvent roots are -2a+b+1 = 0 and a+2 = 4
    CHECK(t.find_class("(1,2,3,4,5)")->gamma == poly({0, 0, 1}));
    CHECK(t.find_class("(1,3,5,2,4)")->gamma == poly({16, -8, 1}));
    // identity: X - (a^2-4a-2b+3) = X + 7
    CHECK(t.find_class("()")->gamma == poly({7, 1}));
    // the order-2 class resolvent printed for this family
    CHECK(t.find_class("(2,5)(3,4)")->gamma == poly({-4952, -1857, -507, -40, -1, 1}));
}

TEST_CASE("dihedral quintic family: trace criterion at many primes and parameters") {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 3}, {1, 1}, {5, 2}}) {
        IntPoly f = brumer(a, b);
        mpz_class disc = discriminant(f);
        mpz_class excluded = mpz_class(3 * a - b + 1) * disc;
        long id_value = a * a - 4 * a - 2 * b + 3;
        for (const auto& p : primes_in_range(2, 1500)) {
            if (excluded % p == 0) continue;
            ModPoly fp = ModPoly::reduce(f, p);
            auto part = distinct_degree_profile(fp).partition();
            mpz_class trace = trace_of(powmod_x(fp, p + 1), fp);
            if (part == std::vector<int>{5}) {
                // irreducible: trace is -2a+b+1 or a+2 mod p
                bool hit = (trace - (-2 * a + b + 1)) % p == 0 || (trace - (a + 2)) % p == 0;
                CHECK(hit);
            } else if (part == std::vector<int>{1, 1, 1, 1, 1}) {
                CHECK((trace - id_value) % p == 0);
            } else {
                CHECK(part == std::vector<int>{1, 2, 2});
            }
        }
    }
}

TEST_CASE("matrix route and gcd-sieve route agree on degree profiles") {
    std::mt19937 rng(5150);
    const long primes[] = {2, 3, 5, 7, 13, 37, 101};
    int done = 0;
    while (done < 120) {
        mpz_class p(primes[done % 7]);
        int n = 2 + done % 6;
        std::uniform_int_distribution<long> coeff(0, p.get_si() - 1);
        std::vector<mpz_class> cs(n + 1);
        for (int i = 0; i < n; ++i) cs[i] = coeff(rng);
        cs[n] = 1;
        IntPoly f(std::move(cs));
        try {
            DegreeProfile via_gcd = distinct_degree_profile(ModPoly::reduce(f, p));
            DegreeProfile via_matrix = matrix_degree_profile(f, p);
            CHECK(via_gcd.partition() == via_matrix.partition());
            ++done;
        } catch (const MathError&) {
            // not squarefree mod p
        }
    }
}

TEST_CASE("class parity matches quadratic residuosity of the discriminant") {
    IntPoly f({-1, -1, 0, 1}); // x^3 - x - 1, disc -23, group S3
    PermGroup g = closure(3, parse_generators("(1,2);(1,2,3)", 3));
    auto classes = conjugacy_classes(g);
    RootSystem rs = certified_roots(f);
    GammaTable t = build_gamma(f, g, classes, IntPoly::monomial(1, 1), rs);
    validate(t);
    auto reports = classify_range_serial(t, 3, 2000);
    // class frequencies sit near 1/6, 1/2, 1/3
    for (const auto& row : chebotarev_check(reports, t)) CHECK(std::abs(row.zscore) < 5.0);
    for (const auto& r : reports) {
        if (!r.good) continue;
        int transpositions = 0;
        for (int e : r.cycle_type) transpositions += e - 1;
        int expect = transpositions % 2 == 0 ? 1 : -1;
        CHECK(mpz_kronecker(t.disc.get_mpz_t(), r.p.get_mpz_t()) == expect);
    }
}
