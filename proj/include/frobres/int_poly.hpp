#ifndef FROBRES_INT_POLY_HPP
#define FROBRES_INT_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace frobres {

/*
 * Dense univariate polynomial over arbitrary-precision integers.
 * Coefficients are stored in ascending degree; the zero polynomial is the
 * empty vector, and the leading coefficient of a nonzero polynomial is
 * always nonzero.
 */
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly constant(const mpz_class& c);
    /// c * x^k
    static IntPoly monomial(const mpz_class& c, int k);
    /// Parse "1,0,-3,2,1" (ascending coefficients). Throws BadInputError.
    static IntPoly parse_csv(const std::string& s);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const mpz_class& operator[](int i) const { return c_[i]; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& lc() const { return c_.back(); }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly scaled(const mpz_class& k) const;
    /// Exact division by a scalar dividing every coefficient.
    IntPoly divexact(const mpz_class& k) const;

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;
    mpz_class content() const; // gcd of coefficients, 0 for the zero polynomial

    std::string csv() const;
    std::string pretty() const; // human-readable, for logs and summaries

  private:
    std::vector<mpz_class> c_;
    void normalize();
};

/// Resultant via the subresultant polynomial remainder sequence, with the
/// Sylvester-determinant sign convention. Throws BadInputError on zero input.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)
mpz_class discriminant(const IntPoly& f);

/// c^(n-1) f(x/c) for c = lc(f): monic, integral, same splitting field
/// (roots are scaled by c).
IntPoly make_monic_integral(const IntPoly& f);

/// True iff gcd(f, f') is constant, i.e. disc(f) != 0.
bool is_squarefree_over_q(const IntPoly& f);

} // namespace frobres

#endif
