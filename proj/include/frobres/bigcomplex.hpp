#ifndef FROBRES_BIGCOMPLEX_HPP
#define FROBRES_BIGCOMPLEX_HPP

#include "frobres/bigfloat.hpp"

namespace frobres {

/// Plain complex number at a fixed precision. Used inside iterative solvers
/// where no enclosure is needed.
struct Cplx {
    BigFloat re, im;

    explicit Cplx(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
};

Cplx operator+(const Cplx& a, const Cplx& b);
Cplx operator-(const Cplx& a, const Cplx& b);
Cplx operator*(const Cplx& a, const Cplx& b);
Cplx operator/(const Cplx& a, const Cplx& b);
/// |re| + |im|, an upper bound for the modulus within a factor sqrt(2).
BigFloat norm1(const Cplx& a);

/*
 * Complex enclosure: a disk of radius err around (re, im). Addition adds the
 * radii, multiplication uses |a| err_b + |b| err_a + err_a err_b; both fold in
 * an explicit bound for the rounding of the centre arithmetic, so the true
 * value stays inside the disk.
 */
struct BigComplex {
    BigFloat re, im, err;

    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec), err(prec) {}
    BigComplex(BigFloat r, BigFloat i, BigFloat e)
        : re(std::move(r)), im(std::move(i)), err(std::move(e)) {}

    static BigComplex exact(long v, mpfr_prec_t prec);
    static BigComplex exact(const mpz_class& v, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return re.prec(); }
};

BigComplex cadd(const BigComplex& a, const BigComplex& b);
BigComplex csub(const BigComplex& a, const BigComplex& b);
BigComplex cmul(const BigComplex& a, const BigComplex& b);
/// Upper bound |re| + |im| + err for the modulus of anything in the disk.
BigFloat mag_upper(const BigComplex& a);

} // namespace frobres

#endif
