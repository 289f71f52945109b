#ifndef FROBRES_BIGFLOAT_HPP
#define FROBRES_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace frobres {

/*
 * RAII wrapper around mpfr_t. Every value carries its own precision;
 * binary operations round to the larger of the two operand precisions.
 * All rounding is to nearest.
 */
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 64);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat of(long v, mpfr_prec_t prec);
    static BigFloat of(const mpz_class& v, mpfr_prec_t prec);
    static BigFloat of(const mpq_class& v, mpfr_prec_t prec);
    /// Parse a decimal string such as "-0.35" or "3.5e2". Throws BadInputError.
    static BigFloat parse(const std::string& s, mpfr_prec_t prec);
    /// 2^e at the given precision (exact).
    static BigFloat pow2(long e, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat sin() const;
    BigFloat cos() const;
    /// this * 2^e (exact).
    BigFloat ldexp(long e) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
    bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
    bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }

    /// Nearest integer (ties away from zero, as mpfr_round).
    mpz_class round_nearest() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
};

} // namespace frobres

#endif
