#ifndef FROBRES_GAMMA_HPP
#define FROBRES_GAMMA_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobres/errors.hpp"
#include "frobres/int_poly.hpp"
#include "frobres/perm_group.hpp"
#include "frobres/roots.hpp"

namespace frobres {

/// Per-class entry of the resolvent table. symmetry_exponents is {1} for a
/// full resolvent; a larger set H means gamma is the reduced polynomial of
/// degree size/|H| and queries must use the H-summed trace.
struct GammaClassEntry {
    std::string label;
    std::vector<int> cycle_type;
    long size = 0;
    IntPoly gamma;
    std::vector<int> symmetry_exponents{1};
};

/*
 * The persisted artifact: one integer resolvent per conjugacy class, plus the
 * data needed to classify a prime. bad_entries holds primes and, when a
 * resultant would not factor completely, whole composite cofactors; a prime p
 * is bad iff it divides one of the entries.
 */
struct GammaTable {
    int format_version = 1;
    IntPoly f;
    IntPoly h;
    int n = 0;
    std::vector<std::string> generators;
    long group_order = 0;
    std::vector<GammaClassEntry> classes;
    std::vector<mpz_class> bad_entries;
    mpz_class disc;
    std::optional<mpz_class> disc_sqrt;

    const GammaClassEntry* find_class(const std::string& label) const;
    bool is_bad_prime(const mpz_class& p) const;
};

struct BuildOptions {
    long precision_ceiling = kPrecisionCeiling;
    bool parallel = true;
};

/// Multiply out Gamma_C(X) = prod_{sigma in C} (X - sum_j h(a_j) a_sigma(j))
/// for every class and round to integers. The rounding residual must certify
/// below 2^-32; precision escalates automatically, and a certified
/// non-integer coefficient (the validator for a wrong G) throws MathError.
/// rs must carry a published ordering (canonical or user) and may be escalated
/// in place.
GammaTable build_gamma(const IntPoly& f, const PermGroup& g, const std::vector<ConjClass>& classes,
                       const IntPoly& h, RootSystem& rs, const BuildOptions& opts = {});

/// Same, but classes whose (order, cycle type) family admits a power-map
/// symmetry group H of size > 1 get the reduced resolvent
///   prod_{H-orbit reps sigma} (X - sum_j h(a_j) sum_{k in H} a_{sigma^k(j)}).
GammaTable build_gamma_reduced(const IntPoly& f, const PermGroup& g, const std::vector<ConjClass>& classes,
                               const std::vector<SymmetryGroup>& symmetries, const IntPoly& h,
                               RootSystem& rs, const BuildOptions& opts = {});

/// Thrown by validate when two same-cycle-type resolvents share a factor.
struct HUnsuitableError : MathError {
    using MathError::MathError;
};

/// Pairwise resultants of same-cycle-type classes (the only pairs the
/// classifier ever compares); zero resultant -> HUnsuitableError naming the
/// pair. Fills bad_entries with the prime factors of disc(f) and of each
/// resultant (trial division to 1e6, probabilistic primality on cofactors;
/// composite cofactors are stored whole).
void validate(GammaTable& t);

/// h search: x^2, x^3, x, then seeded pseudorandom polynomials of degree
/// <= n-1 with coefficients in [-9, 9]; at most 32 candidates. Returns the
/// first table that validates. Throws MathError when none does.
GammaTable choose_h(const IntPoly& f, const PermGroup& g, const std::vector<ConjClass>& classes,
                    RootSystem& rs, const BuildOptions& opts = {});

/// prod_{i<j} (a_i - a_j) rounded to an integer whose square is exactly
/// disc(f); nullopt when G is not inside A_n or certification fails.
std::optional<mpz_class> sqrt_disc(const IntPoly& f, const PermGroup& g, RootSystem& rs,
                                   const BuildOptions& opts = {});

/// Canonical serialization: sorted keys, no whitespace, big integers as
/// decimal strings. Byte-stable across runs.
std::string table_to_json(const GammaTable& t);
GammaTable table_from_json(const std::string& text);

} // namespace frobres

#endif
