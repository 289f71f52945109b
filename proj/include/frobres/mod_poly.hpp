#ifndef FROBRES_MOD_POLY_HPP
#define FROBRES_MOD_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "frobres/int_poly.hpp"

namespace frobres {

/*
 * Dense polynomial over Z/pZ. Coefficients are reduced into [0, p); the
 * modulus is arbitrary precision, so primes above word size work unchanged.
 * The modulus being prime is the caller's responsibility.
 */
class ModPoly {
  public:
    ModPoly() = default;
    ModPoly(std::vector<mpz_class> coeffs, mpz_class modulus);
    static ModPoly reduce(const IntPoly& f, const mpz_class& p);
    static ModPoly x(const mpz_class& p); // the monomial x
    static ModPoly one(const mpz_class& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const mpz_class& modulus() const { return p_; }
    const mpz_class& operator[](int i) const { return c_[i]; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly make_monic() const; // divides by lc^-1 mod p
    /// Remainder of *this by monic (or invertible-lc) divisor d.
    ModPoly rem(const ModPoly& d) const;

    mpz_class eval(const mpz_class& x) const; // Horner mod p

  private:
    std::vector<mpz_class> c_;
    mpz_class p_;
    void normalize();
    void check_same(const ModPoly& o) const;
};

/// Monic gcd; gcd(f, 0) = monic(f). Throws BadInputError when moduli differ.
ModPoly gcd_mod(const ModPoly& a, const ModPoly& b);

/// x^e mod f for monic f of degree >= 1, e >= 0, by square-and-multiply.
ModPoly powmod_x(const ModPoly& f, const mpz_class& e);

/// base^e mod f (general base, used for iterated Frobenius powers).
ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& f);

/// Power sums s_0..s_kmax of the roots of monic f, via Newton's identities.
std::vector<mpz_class> power_sums(const ModPoly& f, int k_max);

/// Trace of the multiplication-by-g endomorphism of F_p[x]/f; deg g < deg f.
mpz_class trace_of(const ModPoly& g, const ModPoly& f);

/// Count of monic irreducible factors per degree: counts[e] = m_e.
struct DegreeProfile {
    std::map<int, int> counts;

    /// The factor degrees as an ascending partition, e.g. {1,2,2}.
    std::vector<int> partition() const;
    bool operator==(const DegreeProfile& o) const { return counts == o.counts; }
};

/// Distinct-degree profile of squarefree monic f. Throws MathError("bad prime...")
/// when f is not squarefree mod p.
DegreeProfile distinct_degree_profile(const ModPoly& f);

} // namespace frobres

#endif
