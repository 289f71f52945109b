#include "frobres/bigcomplex.hpp"

namespace frobres {

Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }

Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }

Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Cplx operator/(const Cplx& a, const Cplx& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigFloat norm1(const Cplx& a) { return a.re.abs() + a.im.abs(); }

BigComplex BigComplex::exact(long v, mpfr_prec_t prec) {
    return {BigFloat::of(v, prec), BigFloat(prec), BigFloat(prec)};
}

BigComplex BigComplex::exact(const mpz_class& v, mpfr_prec_t prec) {
    return {BigFloat::of(v, prec), BigFloat(prec), BigFloat(prec)};
}

static BigFloat n1(const BigComplex& a) { return a.re.abs() + a.im.abs(); }

BigFloat mag_upper(const BigComplex& a) { return n1(a) + a.err; }

// Bound for the rounding error of one complex add at precision p.
static BigFloat add_slack(const BigComplex& a, const BigComplex& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    return (n1(a) + n1(b)).ldexp(-static_cast<long>(p) + 2);
}

// Bound for the rounding error of one complex multiply (2 mul + 1 add per part).
static BigFloat mul_slack(const BigComplex& a, const BigComplex& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    return (n1(a) * n1(b)).ldexp(-static_cast<long>(p) + 3);
}

BigComplex cadd(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im, a.err + b.err + add_slack(a, b)};
}

BigComplex csub(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im, a.err + b.err + add_slack(a, b)};
}

BigComplex cmul(const BigComplex& a, const BigComplex& b) {
    BigFloat err = mag_upper(a) * b.err + mag_upper(b) * a.err + a.err * b.err +
                   mul_slack(a, b);
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, err};
}

} // namespace frobres
