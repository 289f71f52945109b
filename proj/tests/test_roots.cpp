#include <cmath>

#include "doctest.h"
#include "frobres/errors.hpp"
#include "frobres/roots.hpp"

using namespace frobres;

namespace {

IntPoly poly(std::initializer_list<long> ascending) {
    std::vector<mpz_class> v;
    for (long c : ascending) v.emplace_back(c);
    return IntPoly(std::move(v));
}

const IntPoly kQuintic = poly({1, 0, 0, -3, 2, 1}); // x^5 + 2x^4 - 3x^3 + 1

} // namespace

TEST_CASE("quintic roots match the known approximations") {
    RootSystem rs = certified_roots(kQuintic, 128);
    REQUIRE(rs.n() == 5);
    CHECK(rs.tag == RootSystem::Ordering::canonical);
    const double expected[5][2] = {
        {-3.01, 0.0}, {-0.35, -0.53}, {-0.35, 0.53}, {0.85, -0.31}, {0.85, 0.31}};
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(rs.roots[i].re.to_double() - expected[i][0]) < 0.01);
        CHECK(std::abs(rs.roots[i].im.to_double() - expected[i][1]) < 0.01);
    }
}

TEST_CASE("simple real and cyclotomic root systems") {
    RootSystem rs = certified_roots(poly({-1, 0, 1}), 128); // x^2 - 1
    REQUIRE(rs.n() == 2);
    CHECK(rs.roots[0].re.to_double() == doctest::Approx(-1.0));
    CHECK(rs.roots[1].re.to_double() == doctest::Approx(1.0));
    for (const auto& r : rs.roots) CHECK(r.err < BigFloat::pow2(-100, 128));

    // x^2 + 1: imaginary tie-break puts -i first
    rs = certified_roots(poly({1, 0, 1}), 128);
    CHECK(rs.roots[0].im.to_double() == doctest::Approx(-1.0));
    CHECK(rs.roots[1].im.to_double() == doctest::Approx(1.0));

    // split cubic
    rs = certified_roots(poly({-6, 11, -6, 1}), 128);
    CHECK(rs.roots[0].re.to_double() == doctest::Approx(1.0));
    CHECK(rs.roots[1].re.to_double() == doctest::Approx(2.0));
    CHECK(rs.roots[2].re.to_double() == doctest::Approx(3.0));

    // Phi_7: all roots on the unit circle
    rs = certified_roots(poly({1, 1, 1, 1, 1, 1, 1}));
    REQUIRE(rs.n() == 6);
    for (const auto& r : rs.roots) {
        double m = r.re.to_double() * r.re.to_double() + r.im.to_double() * r.im.to_double();
        CHECK(std::abs(m - 1.0) < 1e-12);
    }
}

TEST_CASE("rejects non-squarefree input") {
    CHECK_THROWS_AS(find_roots(poly({1, 2, 1}), 128), BadInputError);
}

TEST_CASE("product of (x - z_i) reconstructs f within the propagated error") {
    for (const IntPoly& f : {kQuintic, poly({-2, 0, 0, 1}), poly({1, 1, 1, 1, 1})}) {
        RootSystem rs = certified_roots(f);
        mpfr_prec_t prec = rs.precision_bits;
        std::vector<BigComplex> c{BigComplex::exact(1, prec)};
        const BigComplex zero(prec);
        for (const auto& z : rs.roots) {
            c.emplace_back(prec);
            for (size_t i = c.size() - 1; i > 0; --i) c[i] = csub(c[i - 1], cmul(z, c[i]));
            c[0] = csub(zero, cmul(z, c[0]));
        }
        for (int k = 0; k <= f.degree(); ++k) {
            BigFloat dre = (c[k].re - BigFloat::of(f[k], prec)).abs();
            CHECK(dre <= c[k].err);
            CHECK(c[k].im.abs() <= c[k].err);
        }
    }
}

TEST_CASE("non-real roots come in conjugate pairs") {
    RootSystem rs = certified_roots(kQuintic);
    for (int i = 0; i < rs.n(); ++i) {
        if (!(rs.roots[i].im.abs() > rs.roots[i].err)) continue;
        bool paired = false;
        for (int j = 0; j < rs.n(); ++j) {
            BigFloat d = (rs.roots[j].re - rs.roots[i].re).abs() +
                         (rs.roots[j].im + rs.roots[i].im).abs();
            if (d <= (rs.roots[i].err + rs.roots[j].err).ldexp(1)) paired = true;
        }
        CHECK(paired);
    }
}

TEST_CASE("canonical order is idempotent and stable under escalation") {
    RootSystem rs = certified_roots(kQuintic, 128);
    RootSystem again = canonical_order(rs);
    for (int i = 0; i < rs.n(); ++i) {
        CHECK(rs.roots[i].re.cmp(again.roots[i].re) == 0);
        CHECK(rs.roots[i].im.cmp(again.roots[i].im) == 0);
    }
    // escalate() itself asserts ordering stability for canonical systems
    RootSystem up = escalate(kQuintic, rs);
    CHECK(up.precision_bits == 256);
    for (int i = 0; i < rs.n(); ++i) {
        BigFloat drift = (up.roots[i].re - rs.roots[i].re).abs();
        CHECK(drift <= rs.roots[i].err.ldexp(2));
        CHECK(up.roots[i].err < rs.roots[i].err);
    }
    CHECK_THROWS_AS(escalate(kQuintic, up, 300), ResourceCapError);
}

TEST_CASE("user-supplied root ordering") {
    RootSystem rs = certified_roots(kQuintic, 128);
    // reorder as [real root, lower-half pair, upper-half pair]
    std::vector<std::pair<std::string, std::string>> pts = {
        {"-3.01", "0"}, {"-0.35", "-0.53"}, {"0.85", "-0.31"}, {"0.85", "0.31"}, {"-0.35", "0.53"}};
    RootSystem user = user_order(rs, pts);
    CHECK(user.tag == RootSystem::Ordering::user);
    CHECK(user.roots[0].re.to_double() == doctest::Approx(-3.01).epsilon(0.01));
    CHECK(user.roots[2].im.to_double() == doctest::Approx(-0.31).epsilon(0.05));
    CHECK(user.roots[4].im.to_double() == doctest::Approx(0.53).epsilon(0.02));

    pts[0] = {"100", "0"};
    CHECK_THROWS_AS(user_order(rs, pts), BadInputError);
    pts.pop_back();
    CHECK_THROWS_AS(user_order(rs, pts), BadInputError);
    // two lines claiming the same root
    pts = {{"-3.01", "0"}, {"-3.01", "0"}, {"0.85", "-0.31"}, {"0.85", "0.31"}, {"-0.35", "0.53"}};
    CHECK_THROWS_AS(user_order(rs, pts), BadInputError);
}
