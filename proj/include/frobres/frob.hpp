#ifndef FROBRES_FROB_HPP
#define FROBRES_FROB_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobres/gamma.hpp"
#include "frobres/mod_poly.hpp"

namespace frobres {

/// Outcome of classifying one prime against a GammaTable.
struct FrobReport {
    mpz_class p;
    bool good = false;
    std::string bad_reason;               // when !good
    std::vector<int> cycle_type;          // factor-degree partition of f mod p
    std::optional<mpz_class> trace;       // present when resolvents were evaluated
    std::string class_label;
    int gammas_vanishing = 0;             // 0 when the cycle type alone decided
};

/// Classify Frob_p. p must be prime (probabilistically checked). Bad primes
/// get a bad-status report; a table that yields zero or several vanishing
/// resolvents raises MathError (corrupt or mis-validated table).
FrobReport classify(const GammaTable& t, const mpz_class& p);

/// All primes in [lo, hi].
std::vector<mpz_class> primes_in_range(const mpz_class& lo, const mpz_class& hi);

/// Reference implementation: one prime at a time, in order.
std::vector<FrobReport> classify_range_serial(const GammaTable& t, const mpz_class& lo, const mpz_class& hi);

/// OpenMP fan-out over the primes of [lo, hi]; the report stream is ordered
/// by p and byte-identical to the serial route for every worker count.
/// workers <= 0 selects the OpenMP default.
std::vector<FrobReport> classify_range(const GammaTable& t, const mpz_class& lo, const mpz_class& hi,
                                       int workers = 0);

/// Independent trace route: companion-matrix powering instead of power sums.
/// exponents is the symmetry set H ({1} for plain tables); returns
/// sum_{k in H} tr(h(M) M^(p^k)) mod p.
mpz_class companion_trace(const IntPoly& f, const IntPoly& h, const mpz_class& p,
                          const std::vector<int>& exponents);

/// Independent cycle-type route for cross-checks: x^(p^d) is computed by
/// companion-matrix powering and the profile solved from
/// deg gcd(x^(p^d) - x, f) by the divisor sieve, d = 1..n.
DegreeProfile matrix_degree_profile(const IntPoly& f, const mpz_class& p);

/// Observed vs expected class frequencies over the good reports.
struct ChebotarevRow {
    std::string label;
    long observed = 0;
    double frequency = 0.0;
    double expected = 0.0; // |C| / |G|
    double zscore = 0.0;
    bool zscore_valid = false;
};

std::vector<ChebotarevRow> chebotarev_check(const std::vector<FrobReport>& reports, const GammaTable& t);

/// One JSON line per report; decimal strings for p and trace.
std::string report_to_json_line(const FrobReport& r);

} // namespace frobres

#endif
